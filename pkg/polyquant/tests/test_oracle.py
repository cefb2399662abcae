import math
import warnings

import numpy as np
from numpy.testing import assert_allclose

from hypothesis import given, settings
from hypothesis.extra.numpy import arrays
from hypothesis.strategies import floats, integers
from pytest import approx, mark, raises

from polyquant.geometry import RegularPolygon
from polyquant.oracle import (BoundaryCell, LloydState, cell_breakpoints,
                              corner_error_quadrature, count_local_minima,
                              distortion_quadrature, gauss_legendre,
                              golden_section, initial_set, is_unimodal,
                              lloyd_multistart, lloyd_solve, lloyd_step,
                              max_displacement, minimize_over_r,
                              sampled_distortion, voronoi_cells_on_boundary)
from polyquant.polygon import (QuantizerSet, corner_error, optimal_error,
                               optimal_mk_set, vertex_radius)

SIDES = [3, 4, 5, 6, 8, 12]
ORIGIN = QuantizerSet([[0., 0.]])


def _sorted_arcs(cell):
    return sorted(cell.arcs)


def test_gauss_legendre():
    x, w = gauss_legendre(0., 2., 2)
    assert w.sum() == approx(2.)
    assert (w*x**3).sum() == approx(4., rel=1e-14)


def test_golden_section():
    lo, hi = golden_section(lambda x: (x - 0.3)**2, 0., 1., 1e-8)
    assert hi - lo < 1e-8
    assert lo - 1e-9 <= 0.3 <= hi + 1e-9


@mark.parametrize("values, expected", [
    ([3, 2, 1, 2, 3], 1),
    ([1, 2, 1, 2], 2),
    ([1, 1, 1], 1),
    ([1, 2, 3], 1),
    ([3, 1, 1, 3], 1),
    ([2, 1, 2, 1, 2, 1, 2], 3),
])
def test_count_local_minima(values, expected):
    assert count_local_minima(values) == expected


def test_single_point_owns_everything():
    p = RegularPolygon(6)
    cell, = voronoi_cells_on_boundary(p, ORIGIN)
    assert cell.owner_index == 0
    assert len(cell.arcs) == 6
    assert cell.parameter_length() == approx(6., abs=1e-12)


def test_square_vertex_cells():
    p = RegularPolygon(4)
    q = QuantizerSet(p.vertex_array, m=4)
    cells = voronoi_cells_on_boundary(p, q)
    for i, cell in enumerate(cells):
        before = (i - 1) % 4 + 1
        expected = sorted([(i + 1, 0., 0.5), (before, 0.5, 1.)])
        got = _sorted_arcs(cell)
        assert [a[0] for a in got] == [e[0] for e in expected]
        assert_allclose([a[1:] for a in got], [e[1:] for e in expected],
                        atol=1e-12)
    assert len(cell_breakpoints(p, cells)) == 4


def test_hexagon_corner_cell():
    p = RegularPolygon(6)
    q = optimal_mk_set(6, 2)
    cells = voronoi_cells_on_boundary(p, q)
    rho = vertex_radius(6, 2)/p.side_length
    assert rho == approx(2/(math.sqrt(13) + 4), rel=1e-14)
    got = _sorted_arcs(cells[0])
    assert [a[0] for a in got] == [1, 6]
    assert_allclose(got[0][1:], (0., rho), atol=1e-10)
    assert_allclose(got[1][1:], (1 - rho, 1.), atol=1e-10)

    breaks = cell_breakpoints(p, cells)
    assert len(breaks) == 12
    assert_allclose([t for _, t in breaks], [rho, 1 - rho]*6, atol=1e-10)


def test_duplicate_points_rejected():
    p = RegularPolygon(5)
    q = QuantizerSet([[0.1, 0.2], [0.1, 0.2]])
    with raises(ValueError):
        voronoi_cells_on_boundary(p, q)
    with raises(ValueError):
        lloyd_step(p, q)


def test_dask_scan_matches_serial():
    p = RegularPolygon(7)
    q = optimal_mk_set(7, 4)
    serial = voronoi_cells_on_boundary(p, q)
    parallel = voronoi_cells_on_boundary(p, q, dask_delayed=True)
    assert [c.arcs for c in serial] == [c.arcs for c in parallel]


@settings(deadline=None, max_examples=25)
@given(integers(min_value=3, max_value=9),
       arrays(float, (6, 2), elements=floats(min_value=-1.2, max_value=1.2),
              unique=True))
def test_partition_property(m, coords):
    p = RegularPolygon(m)
    q = QuantizerSet(coords)
    if q.has_duplicates():
        return
    cells = voronoi_cells_on_boundary(p, q)
    arc_length = sum(c.parameter_length() for c in cells)*p.side_length
    assert arc_length == approx(p.perimeter, abs=1e-9)
    for cell in cells:
        assert all(hi > lo for _, lo, hi in cell.arcs)


def test_quadrature_origin():
    for m in (3, 6, 10):
        p = RegularPolygon(m)
        expected = (2 + math.cos(2*math.pi/m))/3
        assert distortion_quadrature(p, ORIGIN, 8).total == approx(
            expected, rel=1e-13)
    assert distortion_quadrature(RegularPolygon(6), ORIGIN).total == approx(
        5/6, rel=1e-13)


@mark.parametrize("m", SIDES)
@mark.parametrize("k", [1, 2, 3, 5, 10])
def test_quadrature_matches_closed_form(m, k):
    p = RegularPolygon(m)
    report = distortion_quadrature(p, optimal_mk_set(m, k), 8)
    exact = optimal_error(m, k)
    assert report.method == 'quadrature'
    assert report.total == approx(exact.total, rel=1e-9)
    assert report.corner_part == approx(exact.corner_part, rel=1e-9)
    assert report.contributions.shape == (m*k, )


@mark.parametrize("nodes", [0, 1])
def test_quadrature_needs_two_nodes(nodes):
    with raises(ValueError):
        distortion_quadrature(RegularPolygon(4), ORIGIN, nodes)


def test_quadrature_agrees_with_fine_sampling():
    p = RegularPolygon(6)
    q = optimal_mk_set(6, 2)
    assert sampled_distortion(p, q) == approx(
        distortion_quadrature(p, q).total, rel=1e-6)

    rng = np.random.default_rng(3)
    q = QuantizerSet(rng.uniform(-1, 1, size=(9, 2)))
    assert sampled_distortion(p, q, samples=10**5) == approx(
        distortion_quadrature(p, q).total, rel=1e-6)


@mark.parametrize("m", SIDES)
@mark.parametrize("k", [1, 2, 3, 5, 10])
def test_closed_form_is_lloyd_fixed_point(m, k):
    p = RegularPolygon(m)
    q = optimal_mk_set(m, k)
    moved = lloyd_step(p, q)
    assert moved.method == 'lloyd'
    assert max_displacement(q, moved) < 1e-9


def test_lloyd_step_single_point():
    for m in (3, 4, 7):
        q = lloyd_step(RegularPolygon(m), QuantizerSet([[0.3, -0.8]]))
        assert_allclose(q.coords, [[0., 0.]], atol=1e-14)


def test_lloyd_step_square_vertices():
    p = RegularPolygon(4)
    q = lloyd_step(p, QuantizerSet(p.vertex_array, m=4))
    factor = 1 - p.side_length/4*math.sin(math.pi/4)
    assert factor == approx(0.75)
    assert_allclose(q.coords, factor*p.vertex_array, atol=1e-12)


def test_lloyd_step_freezes_empty_cells():
    p = RegularPolygon(4)
    q = QuantizerSet([[0.9, 0.], [0., 0.9], [-0.9, 0.], [0., -0.9],
                      [0., 0.]])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        moved = lloyd_step(p, q)
    assert moved.frozen == (4, )
    assert_allclose(moved.coords[4], [0., 0.])
    assert len(moved) == 5
    assert any("empty" in str(w.message) for w in caught)


def test_lloyd_solve_from_closed_form():
    p = RegularPolygon(6)
    state = lloyd_solve(p, 12, init='closed_form', tol=1e-12)
    assert isinstance(state, LloydState)
    assert state.converged
    assert state.iterations <= 2
    assert state.distortion == approx(0.0187285, abs=1e-7)
    assert state.max_move >= 0


@mark.parametrize("m, k", [(3, 2), (4, 2), (6, 3)])
def test_lloyd_basin(m, k):
    p = RegularPolygon(m)
    state = lloyd_solve(p, m*k, init='perturbed', tol=1e-10, seed=1)
    assert abs(state.distortion - optimal_error(m, k).total) < 1e-7
    assert np.all(np.diff(state.history) <= 1e-13)


def test_lloyd_random_single_point():
    p = RegularPolygon(6)
    for seed in (0, 7):
        state = lloyd_solve(p, 1, init='random', seed=seed)
        assert_allclose(state.points.coords, [[0., 0.]], atol=1e-12)
        assert state.distortion == approx(5/6, rel=1e-12)


def test_lloyd_is_deterministic():
    p = RegularPolygon(5)
    a = lloyd_solve(p, 7, init='random', seed=4, tol=1e-8)
    b = lloyd_solve(p, 7, init='random', seed=4, tol=1e-8)
    assert np.array_equal(a.points.coords, b.points.coords)
    assert a.history == b.history


def test_lloyd_reports_non_convergence():
    p = RegularPolygon(5)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        state = lloyd_solve(p, 9, init='random', seed=2, tol=1e-14,
                            max_iter=2)
    assert not state.converged
    assert state.iterations == 2
    assert len(state.history) == 3
    assert any("did not converge" in str(w.message) for w in caught)


def test_lloyd_init_errors():
    p = RegularPolygon(6)
    with raises(ValueError):
        lloyd_solve(p, 13, init='closed_form')
    with raises(ValueError):
        initial_set(p, 12, init='grid')
    with raises(ValueError):
        lloyd_solve(p, 12, tol=0.)


def test_random_init_lies_on_boundary():
    p = RegularPolygon(5)
    q = initial_set(p, 40, init='random', seed=11)
    apothem = math.cos(math.pi/5)
    norms = np.hypot(*q.coords.T)
    assert np.all(norms <= 1 + 1e-12)
    assert np.all(norms >= apothem - 1e-12)


def test_lloyd_multistart():
    p = RegularPolygon(3)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        states = lloyd_multistart(p, 3, seeds=range(3), max_iter=300)
    assert len(states) == 3
    best = min(s.distortion for s in states)
    assert best >= optimal_error(3, 1).total - 1e-9


@mark.parametrize("m", SIDES)
@mark.parametrize("k", [2, 3, 5, 10])
def test_minimize_over_r(m, k):
    assert abs(minimize_over_r(m, k, 1e-10) - vertex_radius(m, k)) < 1e-8


def test_minimize_over_r_invalid():
    with raises(ValueError):
        minimize_over_r(6, 1, 1e-10)
    with raises(ValueError):
        minimize_over_r(6, 2, -1.)


def test_unimodality_probe():
    for m in range(3, 13):
        for k in range(2, 11):
            assert is_unimodal(m, k)


def test_corner_error_quadrature():
    r = vertex_radius(6, 2)
    assert corner_error_quadrature(6, r) == approx(corner_error(6, r),
                                                   rel=1e-10)
    for m in (3, 4, 9):
        r = 0.7*math.sin(math.pi/m)
        assert corner_error_quadrature(m, r) == approx(corner_error(m, r),
                                                       rel=1e-10)


def test_boundary_cell_repr():
    cell = BoundaryCell(2, [(1, 0., 0.5)])
    assert not cell.is_empty
    assert "owner_index=2" in repr(cell)
    assert BoundaryCell(0).is_empty
