import math

import numpy as np
from numpy.testing import assert_allclose

from hypothesis import given
from hypothesis.strategies import data, floats, integers
from pytest import approx, mark, raises

from polyquant.common import MAX_SIDES
from polyquant.geometry import (BoundaryMeasure, Point2, RegularPolygon,
                                boundary_point, boundary_points, polygon_new,
                                reflect_x, rotate, scale_error,
                                scale_to_circumradius, side_point,
                                squared_distance)


def _set_distance(a, b):
    d2 = ((a[:, np.newaxis, :] - b[np.newaxis, :, :])**2).sum(axis=-1)
    return np.sqrt(d2.min(axis=1)).max()


def test_square_vertices():
    p = polygon_new(4)
    assert_allclose(p.vertex_array,
                    [[1, 0], [0, 1], [-1, 0], [0, -1]], atol=1e-15)
    assert p.vertex(5) == p.vertex(1)


@mark.parametrize("m, expected", [
    (6, 1.0), (3, math.sqrt(3)), (4, math.sqrt(2))])
def test_side_length(m, expected):
    assert polygon_new(m).side_length == approx(expected, abs=1e-15)


@mark.parametrize("m", [2, 0, -3, MAX_SIDES + 1])
def test_invalid_sides(m):
    with raises(ValueError):
        polygon_new(m)


def test_non_integer_sides():
    with raises(ValueError):
        RegularPolygon(4.5)
    with raises(ValueError):
        RegularPolygon(True)


@mark.parametrize("m, j, t, expected", [
    (4, 1, 0., (1., 0.)),
    (4, 1, 0.5, (0.5, 0.5)),
    (6, 2, 1., (math.cos(2*math.pi/3), math.sin(2*math.pi/3))),
])
def test_side_point(m, j, t, expected):
    pt = side_point(polygon_new(m), j, t)
    assert isinstance(pt, Point2)
    assert_allclose(pt, expected, atol=1e-15)


@mark.parametrize("j, t", [(0, 0.5), (5, 0.5), (1, -0.1), (1, 1.5)])
def test_side_point_out_of_range(j, t):
    with raises(ValueError):
        side_point(polygon_new(4), j, t)


@mark.parametrize("a, b, expected", [
    ((0, 0), (3, 4), 25.),
    ((1, 1), (1, 1), 0.),
])
def test_squared_distance(a, b, expected):
    assert squared_distance(a, b) == expected


def test_squared_distance_matches_hexagon_side():
    d2 = squared_distance((1, 0), (math.cos(math.pi/3), math.sin(math.pi/3)))
    assert d2 == approx(polygon_new(6).side_length**2, abs=1e-15)


def test_point_must_be_finite():
    with raises(ValueError):
        Point2(float('nan'), 0.)


@mark.parametrize("m", [3, 4, 5, 6, 7, 12, 100])
def test_rotational_closure(m):
    p = polygon_new(m)
    rotated = rotate(p.vertex_array, 2*math.pi/m)
    assert_allclose(rotated, np.roll(p.vertex_array, -1, axis=0),
                    atol=1e-12)


@mark.parametrize("m", [3, 4, 5, 6, 7, 12, 100])
def test_mirror_closure(m):
    verts = polygon_new(m).vertex_array
    assert _set_distance(reflect_x(verts), verts) < 1e-12


@mark.parametrize("m", [3, 4, 6, 17, 1000])
def test_perimeter(m):
    p = polygon_new(m)
    verts = np.vstack([p.vertex_array, p.vertex_array[:1]])
    sides = np.hypot(*np.diff(verts, axis=0).T)
    assert sides.sum() == approx(m*2*math.sin(math.pi/m), abs=1e-12)
    assert p.perimeter == approx(sides.sum(), abs=1e-12)


@given(data())
def test_side_point_is_affine(d):
    m = d.draw(integers(min_value=3, max_value=64))
    j = d.draw(integers(min_value=1, max_value=m))
    t1 = d.draw(floats(min_value=0, max_value=1))
    t2 = d.draw(floats(min_value=0, max_value=1))
    p = polygon_new(m)
    mid = side_point(p, j, 0.5*(t1 + t2))
    a, b = side_point(p, j, t1), side_point(p, j, t2)
    assert_allclose(mid, 0.5*(np.asarray(a) + np.asarray(b)), atol=1e-14)


def test_side_points_vectorized():
    p = polygon_new(5)
    t = np.linspace(0, 1, 7)
    pts = p.side_points(3, t)
    assert pts.shape == (7, 2)
    for ti, pt in zip(t, pts):
        assert_allclose(pt, p.side_point(3, ti), atol=1e-15)


def test_boundary_points():
    p = polygon_new(6)
    assert_allclose(boundary_point(p, 0.), p.vertex(1), atol=1e-15)
    assert_allclose(boundary_point(p, 1.5), p.side_point(2, 0.5), atol=1e-15)
    assert_allclose(boundary_point(p, 6.), p.vertex(1), atol=1e-15)
    assert boundary_points(p, np.zeros((3, 4))).shape == (3, 4, 2)
    with raises(ValueError):
        boundary_points(p, [6.5])


def test_boundary_measure():
    p = polygon_new(8)
    mu = BoundaryMeasure(p)
    assert mu.total_mass() == approx(1.)
    assert mu.mass(2, 0., 1.) == approx(1/8)
    assert mu.mass(2, 0.25, 0.75) == approx(1/16)
    assert mu.density == approx(1/p.perimeter)
    with raises(ValueError):
        mu.mass(9, 0., 1.)


def test_scaling():
    pts = np.array([[1., 0.], [0., 0.5]])
    assert_allclose(scale_to_circumradius(pts, 2.), 2*pts)
    assert scale_error(3., 2.) == approx(12.)
    with raises(ValueError):
        scale_error(3., 0.)
