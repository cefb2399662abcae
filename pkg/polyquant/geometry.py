"""
Exact geometry of regular m-gons inscribed in the unit circle, and the
uniform (arc-length) probability measure on their boundaries.

Vertices and sides are numbered from 1, so that vertex ``j`` sits at angle
``2*pi*(j-1)/m`` and side ``j`` joins vertex ``j`` to vertex ``j+1`` (vertex
``m+1`` is vertex 1).
"""

from collections import namedtuple

import math

import numpy as np

from .common import check_positive, check_sides


class Point2(namedtuple('Point2', ['x', 'y'])):
    """ A point (position vector) in the Euclidean plane. """

    __slots__ = ()

    def __new__(cls, x, y):
        x, y = float(x), float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError("Point2 coordinates must be finite (got ({}, {}))"
                             .format(x, y))
        return super(Point2, cls).__new__(cls, x, y)


def squared_distance(a, b):
    """ Squared Euclidean distance rho(a, b) between two plane points. """
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return float(dx*dx + dy*dy)


class RegularPolygon(object):
    """
    Regular m-sided polygon inscribed in the unit circle, with vertex 1 on
    the positive x-axis.

    Parameters
    ----------
    m : int
        Number of sides, 3 <= m <= MAX_SIDES.

    Attributes
    ----------
    m : int
        Number of sides.
    circumradius : float
        Always 1.0; other radii are handled by post-scaling (see
        :func:`scale_to_circumradius`).
    vertices : list of Point2
        The m vertices in counterclockwise order.
    side_length : float
        Common side length, 2 sin(pi/m).
    perimeter : float
        m times the side length.

    """

    __slots__ = ('_m', '_vertices', '_vertex_array', '_side_length')

    circumradius = 1.0

    def __init__(self, m):
        m = check_sides(m)
        angles = 2.*np.pi*np.arange(m)/m
        vertex_array = np.column_stack([np.cos(angles), np.sin(angles)])
        vertex_array.flags.writeable = False

        self._m = m
        self._vertex_array = vertex_array
        self._vertices = tuple(Point2(x, y) for x, y in vertex_array)
        self._side_length = 2.*math.sin(math.pi/m)

    def __repr__(self):
        return "RegularPolygon(m={})".format(self._m)

    def __eq__(self, other):
        return isinstance(other, RegularPolygon) and other.m == self.m

    def __hash__(self):
        return hash(('RegularPolygon', self._m))

    @property
    def m(self):
        return self._m

    @property
    def vertices(self):
        return list(self._vertices)

    @property
    def vertex_array(self):
        return self._vertex_array

    @property
    def side_length(self):
        return self._side_length

    @property
    def perimeter(self):
        return self._m*self._side_length

    def vertex(self, j):
        """ Vertex ``j`` (1-based, ``j = m+1`` wraps to vertex 1). """
        if not 1 <= j <= self._m + 1:
            raise ValueError("Vertex index must be in [1, {}] (got {})"
                             .format(self._m + 1, j))
        return self._vertices[(j - 1) % self._m]

    def side_endpoints(self, j):
        """ Position vectors of the two vertices bounding side ``j``. """
        self._check_side(j)
        start = self._vertex_array[j - 1]
        end = self._vertex_array[j % self._m]
        return start, end

    def side_point(self, j, t):
        """ The point M_j(t) = t*a_{j+1} + (1-t)*a_j on side ``j``. """
        t = float(t)
        if not 0. <= t <= 1.:
            raise ValueError("Side parameter must be in [0, 1] (got {})"
                             .format(t))
        start, end = self.side_endpoints(j)
        return Point2(*(t*end + (1. - t)*start))

    def side_points(self, j, t):
        """ Vectorized :meth:`side_point`; returns an array of shape
        ``t.shape + (2, )`` and does not range-check `t`. """
        start, end = self.side_endpoints(j)
        t = np.asarray(t, dtype=float)[..., np.newaxis]
        return t*end + (1. - t)*start

    def _check_side(self, j):
        if not (isinstance(j, (int, np.integer)) and 1 <= j <= self._m):
            raise ValueError("Side index must be an integer in [1, {}] "
                             "(got {!r})".format(self._m, j))


def polygon_new(m):
    """ Construct the regular m-gon inscribed in the unit circle. """
    return RegularPolygon(m)


def side_point(p, j, t):
    """ Point M_j(t) on side ``j`` of polygon `p`; see
    :meth:`RegularPolygon.side_point`. """
    return p.side_point(j, t)


def boundary_points(p, s):
    """
    Arc-length parametrization of the whole polygon boundary.

    Parameters
    ----------
    p : RegularPolygon
    s : array_like
        Boundary coordinate measured counterclockwise from vertex 1 in units
        of side lengths, 0 <= s < m. Side ``j = floor(s) + 1`` is traversed
        with parameter ``t = s - floor(s)``.

    Returns
    -------
    Array of shape ``s.shape + (2, )`` of boundary points.

    """
    s = np.asarray(s, dtype=float)
    if np.any((s < 0) | (s > p.m)):
        raise ValueError("Boundary coordinate must lie in [0, {}]".format(p.m))
    idx = np.minimum(np.floor(s).astype(int), p.m - 1)
    t = (s - idx)[..., np.newaxis]
    verts = p.vertex_array
    start = verts[idx]
    end = verts[(idx + 1) % p.m]
    return t*end + (1. - t)*start


def boundary_point(p, s):
    """ Scalar version of :func:`boundary_points`, returning a Point2. """
    return Point2(*boundary_points(p, float(s)))


class BoundaryMeasure(object):
    """ Uniform probability measure on the boundary of a regular polygon.

    The density is 1/(m*l) per unit arc length, which on each side
    parametrized by t in [0, 1] reads dP = |dt|/m.
    """

    __slots__ = ('_polygon', )

    def __init__(self, polygon):
        self._polygon = polygon

    @property
    def polygon(self):
        return self._polygon

    @property
    def density(self):
        p = self._polygon
        return 1./(p.m*p.side_length)

    def mass(self, j, t_lo, t_hi):
        """ Probability mass of side ``j`` between parameters t_lo < t_hi. """
        self._polygon._check_side(j)
        return (t_hi - t_lo)/self._polygon.m

    def total_mass(self):
        p = self._polygon
        return self.density*p.m*p.side_length


def rotate(points, angle):
    """ Rotate an (n, 2) array of points counterclockwise about the origin. """
    c, s = math.cos(angle), math.sin(angle)
    rot = np.array([[c, -s], [s, c]])
    return np.asarray(points, dtype=float) @ rot.T


def reflect_x(points):
    """ Reflect an (n, 2) array of points across the x-axis. """
    out = np.array(points, dtype=float)
    out[..., 1] *= -1.
    return out


def scale_to_circumradius(points, R):
    """ Map points computed for the unit circumradius to circumradius `R`. """
    R = check_positive('R', R)
    return R*np.asarray(points, dtype=float)


def scale_error(value, R):
    """ Map a quantization error or coefficient computed for the unit
    circumradius to circumradius `R` (errors scale as R**2). """
    R = check_positive('R', R)
    return value*R*R
