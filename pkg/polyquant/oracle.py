"""
Numerical machinery that checks the closed forms independently: Voronoi
cells restricted to the polygon boundary, quadrature of the distortion,
Lloyd iteration on the boundary and one-dimensional minimization over the
vertex radius.

Nothing in here assumes the symmetric structure of the closed-form sets;
cells are found by scanning each side for changes of the nearest point and
bisecting the canonical equation rho(d, a) - rho(d, b) = 0 at each change.
"""

from collections import OrderedDict

import logging
import math
import warnings

import dask
import numpy as np
from dask import delayed

from .common import (BISECT_TOL, DEFAULT_NODES, DEFAULT_SEED, DEFAULT_TOL,
                     FINE_SAMPLES, LLOYD_MAX_ITER, MONOTONE_SLACK,
                     PERTURB_NOISE, SCAN_POINTS, check_positive,
                     check_positive_int, check_radius, check_sides, half_side)
from .geometry import RegularPolygon, boundary_points
from .polygon import (DistortionReport, QuantizerSet, corner_point_formula,
                      optimal_set, total_error_of_r)

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1)/2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5))/2  # 1 / phi^2

#: Ways to seed a Lloyd solve
LLOYD_INITS = ('closed_form', 'perturbed', 'random')


def gauss_legendre(a, b, nodes):
    """
    Gauss-Legendre nodes and weights on the interval [a, b].

    Parameters
    ----------
    a, b : float
        Integration bounds.
    nodes : int
        Number of nodes; the rule is exact for polynomials of degree
        2*nodes - 1.

    Returns
    -------
    x, w : ndarray
        Nodes and weights.

    """
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5*(b - a)
    return half*x + 0.5*(a + b), half*w


def golden_section(f, a, b, tol, max_iter=500):
    """
    Golden-section search.

    Given a function f with a single local minimum in the interval [a, b],
    returns a sub-interval (lo, hi) containing the minimum with
    hi - lo < tol.
    """
    a, b = min(a, b), max(a, b)
    c = a + INV_PHI_SQUARE*(b - a)
    d = a + INV_PHI*(b - a)
    yc, yd = f(c), f(d)

    it = 0
    while (b - a) >= tol and it < max_iter:
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI_SQUARE*(b - a)
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI*(b - a)
            yd = f(d)
        it += 1
    logger.debug("golden section stopped after %d steps, bracket [%r, %r]",
                 it, a, b)
    return a, b


class BoundaryCell(object):
    """
    The Voronoi region of one quantizer point, restricted to the polygon
    boundary.

    Attributes
    ----------
    owner_index : int
        Index of the owning point in its QuantizerSet.
    arcs : list of (int, float, float)
        Parameter intervals (side j, t_lo, t_hi) with t_hi > t_lo, in
        increasing side order.

    """

    __slots__ = ('owner_index', 'arcs')

    def __init__(self, owner_index, arcs=()):
        self.owner_index = owner_index
        self.arcs = list(arcs)

    def __repr__(self):
        return "BoundaryCell(owner_index={}, arcs={})".format(
            self.owner_index, self.arcs)

    @property
    def is_empty(self):
        return not self.arcs

    def parameter_length(self):
        """ Total side-parameter length covered; multiply by the side length
        for arc length, or divide by m for probability mass. """
        return sum(hi - lo for _, lo, hi in self.arcs)


def _check_distinct(q):
    if q.n == 0:
        raise ValueError("Quantizer set must not be empty")
    if q.has_duplicates():
        raise ValueError("Quantizer set contains duplicate points")


def _bisect_breakpoint(start, end, a, b, lo, hi, tol=BISECT_TOL):
    """ Locate the root of rho(M(t), a) - rho(M(t), b) in [lo, hi], where
    the sign goes from <= 0 at lo to >= 0 at hi. """

    def g(t):
        x = t*end + (1. - t)*start
        da, db = x - a, x - b
        return da.dot(da) - db.dot(db)

    g_lo, g_hi = g(lo), g(hi)
    while hi - lo > tol:
        mid = 0.5*(lo + hi)
        g_mid = g(mid)
        if g_mid <= 0.:
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    # g is affine in t, so the secant through the final bracket lands on
    # the root up to round-off
    if g_hi != g_lo:
        root = lo - g_lo*(hi - lo)/(g_hi - g_lo)
        return min(max(root, lo), hi)
    return 0.5*(lo + hi)


def _scan_side(start, end, coords, j, scan):
    """ Owner-labelled arcs [(owner, j, t_lo, t_hi), ...] of one side. """
    t = np.linspace(0., 1., scan + 1)
    pts = t[:, np.newaxis]*end + (1. - t[:, np.newaxis])*start
    d2 = ((pts[:, np.newaxis, :] - coords[np.newaxis, :, :])**2).sum(axis=-1)
    # argmin keeps the first minimum, so ties go to the lower index
    owners = np.argmin(d2, axis=1)

    arcs = []
    lo, owner = 0., int(owners[0])
    for i in np.nonzero(owners[1:] != owners[:-1])[0]:
        nxt = int(owners[i + 1])
        brk = _bisect_breakpoint(start, end, coords[owner], coords[nxt],
                                 t[i], t[i + 1])
        if brk > lo:
            arcs.append((owner, j, lo, brk))
            lo = brk
        owner = nxt
    if lo < 1.:
        arcs.append((owner, j, lo, 1.))
    return arcs


def voronoi_cells_on_boundary(p, q, scan=SCAN_POINTS, dask_delayed=False):
    """
    Partition the polygon boundary into the Voronoi cells of a quantizer set.

    Parameters
    ----------
    p : RegularPolygon
    q : QuantizerSet
        Non-empty set of distinct points.
    scan : int
        Number of uniform parameter steps per side used to detect changes of
        the nearest point; each change is then bisected to BISECT_TOL.
    dask_delayed : bool
        Scan the sides as ``dask.delayed`` tasks. Results are gathered in
        side order, so the output is identical to the serial path.

    Returns
    -------
    list of BoundaryCell, one per point of `q` in order (cells of points
    that own no part of the boundary have no arcs).

    """
    _check_distinct(q)
    scan = check_positive_int('scan', scan)
    coords = np.asarray(q.coords)
    verts = p.vertex_array

    args = [(verts[j - 1], verts[j % p.m], coords, j, scan)
            for j in range(1, p.m + 1)]
    if dask_delayed:
        side_arcs = dask.compute(*[delayed(_scan_side)(*a) for a in args])
    else:
        side_arcs = [_scan_side(*a) for a in args]

    cells = [BoundaryCell(i) for i in range(q.n)]
    for arcs in side_arcs:
        for owner, j, lo, hi in arcs:
            cells[owner].arcs.append((j, lo, hi))
    return cells


def cell_breakpoints(p, cells):
    """
    Boundary locations where ownership changes.

    Returns
    -------
    list of (j, t) sorted by side then parameter; a change of owner at a
    vertex is reported as (j, 1.0) on the side ending there.

    """
    per_side = [[] for _ in range(p.m)]
    for cell in cells:
        for j, lo, hi in cell.arcs:
            per_side[j - 1].append((lo, hi, cell.owner_index))
    for arcs in per_side:
        arcs.sort()

    out = []
    for j, arcs in enumerate(per_side, start=1):
        for _, hi, _ in arcs[:-1]:
            out.append((j, hi))
        following = per_side[j % p.m]
        if arcs and following and arcs[-1][2] != following[0][2]:
            out.append((j, 1.))
    return out


def _arc_arrays(cells):
    owner, side, lo, hi = [], [], [], []
    for cell in cells:
        for j, a, b in cell.arcs:
            owner.append(cell.owner_index)
            side.append(j)
            lo.append(a)
            hi.append(b)
    return (np.asarray(owner, dtype=int), np.asarray(side, dtype=int),
            np.asarray(lo, dtype=float), np.asarray(hi, dtype=float))


def distortion_quadrature(p, q, nodes_per_arc=DEFAULT_NODES, cells=None):
    """
    Distortion V(P; q) = int min_a rho(x, a) dP(x) by Gauss-Legendre
    quadrature over the boundary Voronoi cells.

    Parameters
    ----------
    p : RegularPolygon
    q : QuantizerSet
    nodes_per_arc : int
        Nodes per arc, >= 2. The integrand is quadratic in t on every arc,
        so any admissible value is exact up to round-off.
    cells : list of BoundaryCell, optional
        Precomputed cells of `q`.

    Returns
    -------
    DistortionReport with method "quadrature" and per-cell contributions.
    For a closed-form m*k set the corner part sums the cells of the first m
    points and the side part the rest.

    """
    nodes_per_arc = check_positive_int('nodes_per_arc', nodes_per_arc,
                                       minimum=2)
    if cells is None:
        cells = voronoi_cells_on_boundary(p, q)
    coords = np.asarray(q.coords)

    owner, side, lo, hi = _arc_arrays(cells)
    x, w = np.polynomial.legendre.leggauss(nodes_per_arc)
    half = 0.5*(hi - lo)
    t = (0.5*(hi + lo))[:, np.newaxis] + half[:, np.newaxis]*x
    verts = p.vertex_array
    start = verts[side - 1][:, np.newaxis, :]
    end = verts[side % p.m][:, np.newaxis, :]
    pts = t[..., np.newaxis]*end + (1. - t[..., np.newaxis])*start
    rho = ((pts - coords[owner][:, np.newaxis, :])**2).sum(axis=-1)
    per_arc = half*(rho @ w)/p.m
    contributions = np.bincount(owner, weights=per_arc, minlength=q.n)

    corner = side_part = None
    if q.method == 'closed_form' and q.m == p.m and q.k is not None:
        corner = contributions[:p.m].sum()
        side_part = contributions[p.m:].sum()
    params = OrderedDict([('m', p.m), ('n', q.n), ('k', q.k), ('r', q.r)])
    return DistortionReport(contributions.sum(), corner_part=corner,
                            side_part=side_part, method='quadrature',
                            params=params, contributions=contributions)


def _centroids(p, q, cells):
    """ Conditional means of the boundary measure over each cell; points
    with empty cells are returned unchanged and listed as frozen. """
    coords = np.array(q.coords)
    new = coords.copy()
    verts = p.vertex_array
    frozen = []
    for cell in cells:
        if cell.is_empty:
            frozen.append(cell.owner_index)
            continue
        mass = 0.
        moment = np.zeros(2)
        for j, lo, hi in cell.arcs:
            # M_j is affine in t, so its mean over [lo, hi] is its midpoint
            tm = 0.5*(lo + hi)
            mid = tm*verts[j % p.m] + (1. - tm)*verts[j - 1]
            mass += (hi - lo)/p.m
            moment += (hi - lo)/p.m*mid
        new[cell.owner_index] = moment/mass
    if frozen:
        warnings.warn("Voronoi cells of points {} are empty on the boundary;"
                      " those points were left in place".format(frozen))
    return new, tuple(frozen)


def lloyd_step(p, q, cells=None):
    """
    One simultaneous Lloyd update: every point moves to the conditional mean
    of the boundary measure over its Voronoi cell.

    Returns
    -------
    QuantizerSet tagged "lloyd"; points whose cell is empty are left where
    they are and listed in its ``frozen`` attribute.

    """
    if cells is None:
        cells = voronoi_cells_on_boundary(p, q)
    new, frozen = _centroids(p, q, cells)
    return q.with_coords(new, method='lloyd', frozen=frozen)


def max_displacement(q_old, q_new):
    """ Largest Euclidean distance moved by any point between two sets. """
    diff = np.asarray(q_new.coords) - np.asarray(q_old.coords)
    return float(np.sqrt((diff**2).sum(axis=1)).max())


class LloydState(object):
    """
    Outcome of a Lloyd solve.

    Attributes
    ----------
    points : QuantizerSet
        The final point set.
    iterations : int
        Number of Lloyd steps taken.
    max_move : float
        Largest point displacement in the last step.
    distortion : float
        Distortion of the final set.
    converged : bool
        Whether ``max_move`` dropped below the tolerance within the budget.
    history : list of float
        Distortion before every step, followed by the final distortion.
    frozen : tuple of int
        Points frozen by an empty cell in the last step.

    """

    __slots__ = ('points', 'iterations', 'max_move', 'distortion',
                 'converged', 'history', 'frozen')

    def __init__(self, points, iterations, max_move, distortion,
                 converged=False, history=(), frozen=()):
        self.points = points
        self.iterations = iterations
        self.max_move = max_move
        self.distortion = distortion
        self.converged = converged
        self.history = list(history)
        self.frozen = tuple(frozen)

    def __repr__(self):
        return ("LloydState(n={}, iterations={}, max_move={!r}, "
                "distortion={!r}, converged={})"
                .format(self.points.n, self.iterations, self.max_move,
                        self.distortion, self.converged))

    def to_dict(self):
        out = OrderedDict([
            ('m', self.points.m), ('n', self.points.n),
            ('iterations', self.iterations),
            ('max_move', self.max_move),
            ('distortion', self.distortion),
            ('converged', self.converged),
            ('frozen', list(self.frozen)),
        ])
        out['points'] = self.points.to_dict()['points']
        return out


def initial_set(p, n, init='closed_form', seed=DEFAULT_SEED,
                noise=PERTURB_NOISE):
    """
    Starting configuration for a Lloyd solve.

    Parameters
    ----------
    p : RegularPolygon
    n : int
        Number of points.
    init : {'closed_form', 'perturbed', 'random'}
        The closed-form m*k set (n must be a multiple of m), that set with
        uniform noise in [-noise, noise] added to every coordinate, or n
        points drawn uniformly by arc length on the boundary.
    seed : int
        Seed for the random generator (ignored for "closed_form").

    """
    n = check_positive_int('n', n)
    if init not in LLOYD_INITS:
        raise ValueError("Unknown initialization {!r}; expected one of {}"
                         .format(init, LLOYD_INITS))
    rng = np.random.default_rng(seed)
    if init == 'random':
        s = np.sort(rng.uniform(0., p.m, size=n))
        return QuantizerSet(boundary_points(p, s), m=p.m, n=n,
                            method='manual')

    q = optimal_set(p.m, n)
    if init == 'perturbed':
        noise = check_positive('noise', noise)
        jitter = rng.uniform(-noise, noise, size=(n, 2))
        q = q.with_coords(np.asarray(q.coords) + jitter, method='manual')
    return q


def lloyd_solve(p, n, init='closed_form', tol=DEFAULT_TOL,
                max_iter=LLOYD_MAX_ITER, seed=DEFAULT_SEED,
                noise=PERTURB_NOISE, nodes=DEFAULT_NODES, dask_delayed=False):
    """
    Iterate :func:`lloyd_step` until no point moves by ``tol`` or more, or
    ``max_iter`` steps have been taken.

    Running out of iterations is not an error; it is reported through
    ``LloydState.converged`` and a warning.

    Returns
    -------
    LloydState

    """
    tol = check_positive('tol', tol)
    max_iter = check_positive_int('max_iter', max_iter)
    q = initial_set(p, n, init=init, seed=seed, noise=noise)

    history = []
    converged = False
    move = float('inf')
    frozen = ()
    it = 0
    cells = voronoi_cells_on_boundary(p, q, dask_delayed=dask_delayed)
    while it < max_iter:
        history.append(distortion_quadrature(p, q, nodes, cells=cells).total)
        new = lloyd_step(p, q, cells=cells)
        move = max_displacement(q, new)
        frozen = new.frozen
        q = new
        it += 1
        cells = voronoi_cells_on_boundary(p, q, dask_delayed=dask_delayed)
        logger.debug("lloyd step %d: distortion %.17g, max move %.3g",
                     it, history[-1], move)
        if move < tol:
            converged = True
            break

    final = distortion_quadrature(p, q, nodes, cells=cells).total
    history.append(final)
    increases = np.diff(history)
    if np.any(increases > MONOTONE_SLACK):
        warnings.warn("Lloyd distortion increased by up to {:.3g} between "
                      "steps".format(increases.max()))
    if not converged:
        warnings.warn("Lloyd iteration did not converge within {} steps "
                      "(last move {:.3g}, tol {:.3g})"
                      .format(max_iter, move, tol))
    logger.info("lloyd solve m=%d n=%d init=%s: %d steps, distortion %.17g",
                p.m, q.n, init, it, final)
    return LloydState(q, it, move, final, converged=converged,
                      history=history, frozen=frozen)


def lloyd_multistart(p, n, seeds=range(5), tol=DEFAULT_TOL,
                     max_iter=LLOYD_MAX_ITER):
    """ Random-start Lloyd solves, one per seed, in seed order. Comparing
    their distortions with the closed form is evidence (not proof) that the
    symmetric configuration is the global optimum. """
    return [lloyd_solve(p, n, init='random', tol=tol, max_iter=max_iter,
                        seed=seed) for seed in seeds]


def minimize_over_r(m, k, tol=1e-10):
    """
    Minimize the distortion of the symmetric m*k configuration over the
    vertex radius r in [0, l/2] by golden-section search.

    Returns
    -------
    float
        Midpoint of the final bracket, whose width is below `tol`.

    """
    m = check_sides(m)
    k = check_positive_int('k', k, minimum=2)
    tol = check_positive('tol', tol)
    lo, hi = golden_section(lambda r: total_error_of_r(m, k, r),
                            0., half_side(m), tol)
    return 0.5*(lo + hi)


def count_local_minima(values):
    """ Number of local minima of a sampled curve, counting endpoints and
    treating plateaus as a single point. """
    steps = np.sign(np.diff(np.asarray(values, dtype=float)))
    steps = steps[steps != 0]
    if steps.size == 0:
        return 1
    count = int(np.sum((steps[:-1] < 0) & (steps[1:] > 0)))
    count += int(steps[0] > 0) + int(steps[-1] < 0)
    return count


def is_unimodal(m, k, samples=10**4):
    """ Whether total_error_of_r(m, k, .) sampled on a uniform grid of
    [0, l/2] has a single local minimum. """
    grid = np.linspace(0., half_side(m), samples)
    values = [total_error_of_r(m, k, r) for r in grid]
    return count_local_minima(values) == 1


def segment_error_quadrature(seg, n, nodes=DEFAULT_NODES):
    """
    Direct quadrature of the segment quantization error

    .. math:: n \\int_{t_1}^{t_1 + w} \\rho(M(t), M(t_1 + w/2)) \\, dt

    with t_1 = r1/l and w = (1 - r2/l - r1/l)/n, the first of n identical
    cells.
    """
    n = check_positive_int('n', n)
    t1 = seg.r1/seg.length
    width = (1. - seg.r2/seg.length - seg.r1/seg.length)/n
    x, w = gauss_legendre(t1, t1 + width, nodes)
    centre = seg.points(t1 + 0.5*width)
    rho = ((seg.points(x) - centre)**2).sum(axis=-1)
    return n*float(w @ rho)


def corner_error_quadrature(m, r, nodes=DEFAULT_NODES):
    """ Quadrature of the corner-point distortion 2 int_0^{r/l}
    rho(M_1(t), a_1) dt. """
    p = RegularPolygon(m)
    r = check_radius(p.m, r)
    a1 = np.asarray(corner_point_formula(p.m, r, 1))
    x, w = gauss_legendre(0., r/p.side_length, nodes)
    rho = ((p.side_points(1, x) - a1)**2).sum(axis=-1)
    return 2.*float(w @ rho)


def sampled_distortion(p, q, samples=FINE_SAMPLES, chunk=2**13):
    """
    Distortion estimated from `samples` equally spaced boundary points
    (midpoints of a uniform arc-length grid), each assigned to its nearest
    quantizer point. Independent of the cell computation.
    """
    samples = check_positive_int('samples', samples)
    coords = np.asarray(q.coords)
    total = 0.
    for begin in range(0, samples, chunk):
        idx = np.arange(begin, min(begin + chunk, samples))
        s = (idx + 0.5)*p.m/samples
        pts = boundary_points(p, s)
        d2 = ((pts[:, np.newaxis, :]
               - coords[np.newaxis, :, :])**2).sum(axis=-1)
        total += d2.min(axis=1).sum()
    return total/samples
