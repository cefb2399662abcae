"""
Labelled outputs built on the closed forms: convergence sweeps as xarray
Datasets or pandas DataFrames, and the oracle-vs-closed-form validation
report for one (m, k).

"""
from collections import OrderedDict

import logging
import math

import numpy as np
import pandas as pd
import xarray as xr

from .coefficient import convergence_arrays
from .common import (DEFAULT_NODES, DEFAULT_SEED, DEFAULT_TOL, FINE_SAMPLES,
                     PERTURB_NOISE, check_positive, check_positive_int,
                     check_sides, get_timestamp)
from .geometry import RegularPolygon, reflect_x
from .oracle import (cell_breakpoints, corner_error_quadrature,
                     distortion_quadrature, is_unimodal, lloyd_solve,
                     lloyd_step, max_displacement, minimize_over_r,
                     sampled_distortion, voronoi_cells_on_boundary)
from .polygon import (corner_error, corner_point_formula, optimal_error,
                      optimal_mk_set, side_error, total_error_of_r)
from .util.records import check_recs, field_attrs, field_names, sweep_recs

try:
    from .version import __version__ as ver
except ImportError:
    ver = 'unknown'

logger = logging.getLogger(__name__)

#: Tolerance floors for checks whose accuracy is limited by the oracle
#: itself rather than by round-off
RADIUS_TOL = 1e-8
SAMPLING_TOL = 1e-6

#: Iteration cap for the Lloyd basin check
BASIN_MAX_ITER = 200


def _history(what):
    return "{}: {} by polyquant-{}".format(get_timestamp(), what, ver)


def convergence_dataset(sides, ks):
    """
    Closed-form convergence of n^2 V_n over a grid of polygons and group
    sizes.

    Parameters
    ----------
    sides : list of int
        Numbers of polygon sides, each >= 3.
    ks : list of int
        Values of k, each >= 1.

    Returns
    -------
    xarray.Dataset with dimensions ``m`` and ``k`` and variables n, r, Vn,
    scaled and deviation on (m, k) plus coefficient on (m, ).

    """
    arrays = convergence_arrays(sides, ks)
    attrs = field_attrs(sweep_recs)
    data_vars = OrderedDict()
    for name in field_names(sweep_recs):
        if name in ('m', 'k'):
            continue
        dims = ['m', ] if name == 'coefficient' else ['m', 'k']
        data_vars[name] = xr.Variable(dims, arrays[name], attrs[name])

    coords = OrderedDict([
        ('m', xr.Variable(['m', ], np.asarray(sides, dtype=int), attrs['m'])),
        ('k', xr.Variable(['k', ], np.asarray(ks, dtype=int), attrs['k'])),
    ])
    ds = xr.Dataset(data_vars, coords=coords)
    ds.attrs.update(dict(
        title="Quantization errors on regular polygon boundaries",
        history=_history("Computed"),
    ))
    return ds


def sweep_frame(sides, ks):
    """ One row per (m, k), m varying slowest, with the sweep columns in
    their fixed order. """
    arrays = convergence_arrays(sides, ks)
    mm, kk = np.meshgrid(np.asarray(sides, dtype=int),
                         np.asarray(ks, dtype=int), indexing='ij')
    coefficient = np.broadcast_to(arrays['coefficient'][:, np.newaxis],
                                  mm.shape)
    columns = dict(arrays, m=mm, k=kk, coefficient=coefficient)
    df = pd.DataFrame(OrderedDict(
        (name, np.ravel(columns[name])) for name in field_names(sweep_recs)
    ))
    return df


def _relative(value, reference):
    if reference == 0:
        return abs(value)
    return abs(value - reference)/abs(reference)


def _set_distance(a, b):
    """ Largest distance from a point of `a` to its nearest point in `b`. """
    d2 = ((a[:, np.newaxis, :] - b[np.newaxis, :, :])**2).sum(axis=-1)
    return float(np.sqrt(d2.min(axis=1)).max())


class _Checks(object):
    """ Accumulates the rows of a validation report. """

    def __init__(self):
        self.rows = []

    def add(self, name, value, reference, error, tolerance):
        passed = bool(error <= tolerance)
        logger.debug("check %s: value=%r reference=%r error=%.3g tol=%.3g %s",
                     name, value, reference, error, tolerance,
                     "ok" if passed else "FAILED")
        self.rows.append((name, float(value), float(reference), float(error),
                          float(tolerance), passed))

    def frame(self):
        return pd.DataFrame(self.rows, columns=field_names(check_recs))


def validate(m, k, tol=DEFAULT_TOL, nodes=DEFAULT_NODES, seed=DEFAULT_SEED,
             samples=FINE_SAMPLES):
    """
    Check the closed forms for one (m, k) against the numerical oracle.

    Parameters
    ----------
    m, k : int
        Polygon sides (>= 3) and group size (>= 1).
    tol : float
        Agreement tolerance for checks limited only by round-off.
    nodes : int
        Gauss-Legendre nodes per arc.
    seed : int
        Seed of the perturbation used by the Lloyd basin check.
    samples : int
        Boundary samples for the fine-sampling estimate.

    Returns
    -------
    pandas.DataFrame with one row per check and the columns name, value,
    reference, error, tolerance and passed. The report passes when every
    row does.

    Notes
    -----
    The radius and fine-sampling checks are limited by the accuracy of the
    oracle, so their tolerances never drop below 1e-8 and 1e-6 (relative)
    respectively.

    """
    m = check_sides(m)
    k = check_positive_int('k', k)
    tol = check_positive('tol', tol)
    p = RegularPolygon(m)
    q = optimal_mk_set(m, k)
    report = optimal_error(m, k)
    exact = report.total
    r = q.r
    checks = _Checks()

    cells = voronoi_cells_on_boundary(p, q)
    quad = distortion_quadrature(p, q, nodes, cells=cells)
    checks.add('quadrature_error', quad.total, exact,
               _relative(quad.total, exact), tol)
    checks.add('quadrature_corner_part', quad.corner_part, report.corner_part,
               abs(quad.corner_part - report.corner_part), tol)

    sampled = sampled_distortion(p, q, samples=samples)
    checks.add('sampled_error', sampled, quad.total,
               _relative(sampled, quad.total), max(tol, SAMPLING_TOL))

    if k >= 2:
        parts = corner_error(m, r) + side_error(m, k, r)
        checks.add('decomposition', parts, total_error_of_r(m, k, r),
                   _relative(parts, total_error_of_r(m, k, r)), tol)
        checks.add('decomposition_total', parts, exact,
                   _relative(parts, exact), tol)
        r_min = minimize_over_r(m, k, 1e-10)
        checks.add('radius_oracle', r_min, r, abs(r_min - r),
                   max(tol, RADIUS_TOL))
        unimodal = is_unimodal(m, k)
        checks.add('unimodality', int(unimodal), 1, int(not unimodal), 0)
    else:
        checks.add('decomposition_total', corner_error(m, r), exact,
                   _relative(corner_error(m, r), exact), tol)

    corner_quad = corner_error_quadrature(m, r, nodes)
    checks.add('corner_quadrature', corner_quad, report.corner_part,
               _relative(corner_quad, report.corner_part), tol)

    moved = max_displacement(q, lloyd_step(p, q, cells=cells))
    checks.add('lloyd_fixed_point', moved, 0., moved, tol)

    basin = lloyd_solve(p, m*k, init='perturbed', tol=1e-10,
                        max_iter=BASIN_MAX_ITER, seed=seed,
                        noise=PERTURB_NOISE, nodes=nodes)
    checks.add('lloyd_basin', basin.distortion, exact,
               abs(basin.distortion - exact), max(tol, 1e-7))

    coords = np.asarray(q.coords)
    rotated = np.asarray(q.rotated(2.*math.pi/m).coords)
    checks.add('rotational_symmetry', _set_distance(rotated, coords), 0.,
               _set_distance(rotated, coords), tol)
    mirrored = reflect_x(coords)
    checks.add('mirror_symmetry', _set_distance(mirrored, coords), 0.,
               _set_distance(mirrored, coords), tol)

    covered = sum(cell.parameter_length() for cell in cells)*p.side_length
    checks.add('partition', covered, p.perimeter,
               abs(covered - p.perimeter), max(tol, 1e-9))

    radius = 1. - 0.5*r*math.sin(math.pi/m)
    radial = max(
        math.hypot(*(np.asarray(corner_point_formula(m, r, j, general=g))
                     - radius*np.asarray(p.vertex(j))))
        for j in range(1, m + 1) for g in (False, True)
    )
    checks.add('corner_radial_form', radial, 0., radial, tol)

    # every corner cell is cut at arc distance r from its vertex
    expected = r/p.side_length
    cuts = [t for _, t in cell_breakpoints(p, cells)]
    if k == 1:
        cut_error = max(abs(t - 0.5) for t in cuts)
    else:
        cut_error = max([abs(t - expected) for t in cuts[::k]]
                        + [abs(t - 1. + expected) for t in cuts[k - 1::k]])
    checks.add('corner_cell_cut', cut_error, 0., cut_error, max(tol, 1e-9))

    df = checks.frame()
    df.attrs['history'] = _history("Validated m={} k={}".format(m, k))
    n_failed = int((~df['passed']).sum())
    logger.info("validate m=%d k=%d: %d checks, %d failed", m, k, len(df),
                n_failed)
    return df
