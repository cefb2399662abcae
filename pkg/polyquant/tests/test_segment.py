import numpy as np
from numpy.testing import assert_allclose

from hypothesis import given
from hypothesis.strategies import floats, integers
from pytest import approx, mark, raises

from polyquant.oracle import segment_error_quadrature
from polyquant.segment import (SegmentSpec, optimal_parameters,
                               segment_optimal_points, segment_quant_error)

UNIT = ((0., 0.), (1., 0.))


@mark.parametrize("seg, n, expected", [
    (SegmentSpec(*UNIT), 2, [[0.25, 0.], [0.75, 0.]]),
    (SegmentSpec(*UNIT, r1=0.25, r2=0.25), 1, [[0.5, 0.]]),
    (SegmentSpec((0., 0.), (2., 0.), 0.5, 0.5), 3,
     [[2/3, 0.], [1., 0.], [4/3, 0.]]),
])
def test_segment_optimal_points(seg, n, expected):
    q = segment_optimal_points(seg, n)
    assert q.n == n
    assert q.m is None
    assert q.method == 'closed_form'
    assert_allclose(q.coords, expected, atol=1e-15)


@mark.parametrize("seg, n, expected", [
    (SegmentSpec(*UNIT), 1, 1/12),
    (SegmentSpec(*UNIT), 4, 1/192),
    (SegmentSpec((0., 0.), (2., 0.), 0.5, 0.5), 2, 1/96),
])
def test_segment_quant_error(seg, n, expected):
    assert segment_quant_error(seg, n) == approx(expected, rel=1e-15)


@mark.parametrize("n", [0, -2, 1.5])
def test_invalid_n(n):
    seg = SegmentSpec(*UNIT)
    with raises(ValueError):
        segment_optimal_points(seg, n)
    with raises(ValueError):
        segment_quant_error(seg, n)


@mark.parametrize("a, b, r1, r2", [
    ((0, 0), (0, 0), 0, 0),
    ((0, 0), (1, 0), -0.1, 0),
    ((0, 0), (1, 0), 0.5, 0.5),
])
def test_invalid_segment(a, b, r1, r2):
    with raises(ValueError):
        SegmentSpec(a, b, r1, r2)


def test_segment_accessors():
    seg = SegmentSpec((1., 1.), (1., 4.), r1=0.5, r2=1.)
    assert seg.length == approx(3.)
    assert seg.inner_length == approx(1.5)
    assert_allclose(seg.d1, (1., 1.5))
    assert_allclose(seg.d2, (1., 3.))
    assert_allclose(seg.point(0.5), (1., 2.5))


def test_parameters_increase_inside_trim():
    seg = SegmentSpec((0., 0.), (3., 4.), r1=1., r2=0.5)
    t = optimal_parameters(seg, 9)
    assert np.all(np.diff(t) > 0)
    assert t[0] > seg.t_lo and t[-1] < seg.t_hi


def test_closed_form_matches_quadrature():
    rng = np.random.default_rng(20)
    for _ in range(50):
        a, b = rng.uniform(-5, 5, size=(2, 2))
        length = np.hypot(*(b - a))
        r1, r2 = rng.uniform(0, 0.45*length, size=2)
        seg = SegmentSpec(a, b, r1, r2)
        for n in (1, 2, 4, 8, 16, 64):
            exact = segment_quant_error(seg, n)
            expected = (length - r1 - r2)**3/(12*n*n*length)
            assert exact == approx(expected, rel=1e-12)
            assert segment_error_quadrature(seg, n) == approx(exact,
                                                              rel=1e-10)


def _segment(ax, ay, angle, length, f1, f2):
    b = (ax + length*np.cos(angle), ay + length*np.sin(angle))
    return SegmentSpec((ax, ay), b, r1=f1*length, r2=f2*length)


segments = dict(
    ax=floats(min_value=-10., max_value=10.),
    ay=floats(min_value=-10., max_value=10.),
    angle=floats(min_value=0., max_value=2*np.pi),
    length=floats(min_value=0.1, max_value=20.),
    f1=floats(min_value=0., max_value=0.45),
    f2=floats(min_value=0., max_value=0.45),
    n=integers(min_value=1, max_value=40),
)


@given(**segments)
def test_points_are_equally_spaced(ax, ay, angle, length, f1, f2, n):
    seg = _segment(ax, ay, angle, length, f1, f2)
    coords = segment_optimal_points(seg, n).coords
    gap = seg.inner_length/n
    d1 = np.asarray(seg.d1)
    d2 = np.asarray(seg.d2)
    steps = np.hypot(*np.diff(coords, axis=0).T)
    assert_allclose(steps, gap, rtol=1e-9, atol=1e-12)
    assert np.hypot(*(coords[0] - d1)) == approx(gap/2, rel=1e-9, abs=1e-12)
    assert np.hypot(*(coords[-1] - d2)) == approx(gap/2, rel=1e-9, abs=1e-12)


@given(**segments)
def test_points_are_lloyd_fixed_point(ax, ay, angle, length, f1, f2, n):
    seg = _segment(ax, ay, angle, length, f1, f2)
    t = optimal_parameters(seg, n)
    edges = np.concatenate([[seg.t_lo], (t[1:] + t[:-1])/2, [seg.t_hi]])
    centroids = (edges[1:] + edges[:-1])/2
    assert_allclose(centroids, t, atol=1e-12)


@given(**segments)
def test_error_scales_quadratically(ax, ay, angle, length, f1, f2, n):
    seg = _segment(ax, ay, angle, length, f1, f2)
    c = 2.7
    scaled = SegmentSpec(c*np.asarray(seg.a), c*np.asarray(seg.b),
                         r1=c*seg.r1, r2=c*seg.r2)
    assert segment_quant_error(scaled, n) == approx(
        c*c*segment_quant_error(seg, n), rel=1e-9)
    assert_allclose(segment_optimal_points(scaled, n).coords,
                    c*segment_optimal_points(seg, n).coords,
                    rtol=1e-9, atol=1e-9)
