"""
Optimal sets of n = m*k means and exact quantization errors for the uniform
distribution on the boundary of a regular m-gon inscribed in the unit circle.

An optimal set holds one point ``a_j`` inside each angle of the polygon and,
for k >= 2, ``k - 1`` points on each side. The Voronoi region of a corner
point cuts both adjacent sides at arc distance ``r`` from the vertex; the
side points are the optimal (k-1)-means of the remaining middle stretch of
each side.
"""

from collections import OrderedDict

import math

import numpy as np

from .common import check_positive_int, check_radius, check_sides
from .geometry import Point2, RegularPolygon, rotate

#: Tags describing how a quantizer set was produced
SET_METHODS = ('closed_form', 'lloyd', 'manual')

#: Tags describing how a distortion value was produced
REPORT_METHODS = ('closed_form', 'quadrature')


class QuantizerSet(object):
    """
    An ordered finite set of plane points with its construction metadata.

    Parameters
    ----------
    points : array_like, shape (n, 2)
        The quantizer points.
    m : int or None
        Number of sides of the polygon the set belongs to (None for sets
        built on a bare segment).
    n : int, optional
        Cardinality; checked against ``len(points)`` when given.
    k : int or None
        Points per side-plus-corner group, when n = m*k.
    r : float or None
        Vertex radius of the construction, when there is one.
    method : {'closed_form', 'lloyd', 'manual'}
        Provenance tag. Points must be pairwise distinct unless the method
        is 'manual'; manual sets may hold duplicates, which the boundary
        oracle in :mod:`polyquant.oracle` rejects.
    frozen : tuple of int
        Indices of points that a Lloyd update left in place because their
        Voronoi cell on the boundary was empty.

    """

    __slots__ = ('_coords', 'm', 'n', 'k', 'r', 'method', 'frozen')

    def __init__(self, points, m=None, n=None, k=None, r=None,
                 method='manual', frozen=()):
        coords = np.array(points, dtype=float).reshape(-1, 2)
        if not np.all(np.isfinite(coords)):
            raise ValueError("Quantizer points must be finite")
        if n is not None and n != len(coords):
            raise ValueError("Expected {} points but got {}"
                             .format(n, len(coords)))
        if method not in SET_METHODS:
            raise ValueError("Unknown construction method {!r}; expected "
                             "one of {}".format(method, SET_METHODS))
        if method != 'manual' and \
                len(np.unique(coords, axis=0)) != len(coords):
            raise ValueError("Points of a {!r} set must be pairwise "
                             "distinct".format(method))
        coords.flags.writeable = False

        self._coords = coords
        self.m = m
        self.n = len(coords)
        self.k = k
        self.r = r
        self.method = method
        self.frozen = tuple(frozen)

    def __repr__(self):
        return ("QuantizerSet(m={}, n={}, k={}, r={}, method={!r})"
                .format(self.m, self.n, self.k, self.r, self.method))

    def __len__(self):
        return self.n

    @property
    def coords(self):
        return self._coords

    @property
    def points(self):
        return [Point2(x, y) for x, y in self._coords]

    def has_duplicates(self):
        return len(np.unique(self._coords, axis=0)) != self.n

    def with_coords(self, coords, method=None, frozen=()):
        """ A copy of this set's metadata around new point coordinates. """
        return QuantizerSet(coords, m=self.m, k=self.k, r=self.r,
                            method=self.method if method is None else method,
                            frozen=frozen)

    def rotated(self, angle):
        """ The set rotated counterclockwise by `angle` about the origin,
        keeping its metadata and point order. """
        return self.with_coords(rotate(self._coords, angle),
                                frozen=self.frozen)

    def to_dict(self):
        return OrderedDict([
            ('m', self.m), ('k', self.k), ('n', self.n), ('r', self.r),
            ('method', self.method),
            ('points', [[float(x), float(y)] for x, y in self._coords]),
        ])


class DistortionReport(object):
    """
    A distortion value, optionally split into the part due to the corner
    points and the part due to the side points.

    Parameters
    ----------
    total : float
        Distortion V.
    corner_part, side_part : float or None
        Contributions of the corner points and of the side points.
    method : {'closed_form', 'quadrature'}
    params : dict
        The (m, n, k, r) parameters the value was computed for.
    contributions : array_like, optional
        Per-cell contributions, indexed like the quantizer set; filled in by
        quadrature.

    """

    __slots__ = ('total', 'corner_part', 'side_part', 'method', 'params',
                 'contributions')

    def __init__(self, total, corner_part=None, side_part=None,
                 method='closed_form', params=None, contributions=None):
        total = float(total)
        if not total >= 0:
            raise ValueError("Distortion must be non-negative (got {})"
                             .format(total))
        if method not in REPORT_METHODS:
            raise ValueError("Unknown report method {!r}; expected one of {}"
                             .format(method, REPORT_METHODS))
        self.total = total
        self.corner_part = None if corner_part is None else float(corner_part)
        self.side_part = None if side_part is None else float(side_part)
        self.method = method
        self.params = OrderedDict(params or {})
        self.contributions = (None if contributions is None
                              else np.asarray(contributions, dtype=float))

    def __repr__(self):
        return ("DistortionReport(total={!r}, method={!r}, params={})"
                .format(self.total, self.method, dict(self.params)))

    def to_dict(self):
        out = OrderedDict(self.params)
        out['V'] = self.total
        out['corner_part'] = self.corner_part
        out['side_part'] = self.side_part
        out['method'] = self.method
        return out


def _trig(m):
    """ (sin(pi/m), cos(2 pi/m), csc(pi/m)) for an m-gon. """
    s = math.sin(math.pi/m)
    return s, math.cos(2.*math.pi/m), 1./s


def vertex_radius(m, k):
    """
    Optimal vertex radius r* for n = m*k means.

    .. math:: r^* = 4 \\sin(\\pi/m) / (2 (k-1) \\sqrt{3 \\cos^2(\\pi/m) + 1} + 4)

    At k = 1 this is sin(pi/m) = l/2: the corner cells meet at the side
    midpoints.
    """
    m = check_sides(m)
    k = check_positive_int('k', k)
    c = math.cos(math.pi/m)
    return (4.*math.sin(math.pi/m)
            / (2.*(k - 1)*math.sqrt(3.*c*c + 1.) + 4.))


def corner_point_formula(m, r, j, general=False):
    """
    Corner point a_j evaluated literally from the closed-form expressions:
    the dedicated a_1 expression for j = 1 and the general expression for
    2 <= j <= m. Pass ``general=True`` to use the general expression at
    j = 1 as well.
    """
    s, c2, csc = _trig(m)
    if j == 1 and not general:
        return Point2(1. - 0.5*r*s, 0.)
    theta = 2.*math.pi*(j - 1)/m
    x = 0.25*math.cos(theta)*(r*(c2 - 1.)*csc + 4.)
    y = math.sin(theta)*(0.25*r*(c2 - 1.)*csc + 1.)
    return Point2(x, y)


def corner_points(p, r):
    """
    The m corner points a_1..a_m of the optimal set for vertex radius `r`.

    Each a_j is the conditional mean of the boundary measure over the two
    stretches of length r adjacent to vertex j, which puts it on the ray
    through vertex j at distance 1 - (r/2) sin(pi/m) from the origin.

    Parameters
    ----------
    p : RegularPolygon
    r : float
        Vertex radius, 0 < r <= l/2.

    Returns
    -------
    list of m Point2

    """
    r = check_radius(p.m, r)
    return [corner_point_formula(p.m, r, j) for j in range(1, p.m + 1)]


def side_parameters(p, k, r):
    """ Parameters t_i = r/l + (2i-1)/(2(k-1)) (1 - 2r/l), i = 1..k-1. """
    k = check_positive_int('k', k)
    r = check_radius(p.m, r)
    if k == 1:
        return np.empty(0)
    i = np.arange(1, k)
    rho = r/p.side_length
    return rho + (2*i - 1)/(2.*(k - 1))*(1. - 2.*rho)


def side_points(p, k, r):
    """
    The k-1 optimal points on each side, for vertex radius `r`.

    Returns
    -------
    list of m lists, list j holding M_j(t_i) for i = 1..k-1 in order; all
    lists are empty when k = 1.

    """
    t = side_parameters(p, k, r)
    return [[Point2(x, y) for x, y in p.side_points(j, t)]
            for j in range(1, p.m + 1)]


def optimal_mk_set(m, k):
    """
    Optimal set of n = m*k means on the boundary of the regular m-gon.

    The corner points a_1..a_m come first, followed by the side points of
    sides 1..m, each side in increasing parameter order.
    """
    p = RegularPolygon(m)
    k = check_positive_int('k', k)
    r = vertex_radius(m, k)
    coords = [tuple(a) for a in corner_points(p, r)]
    for side in side_points(p, k, r):
        coords.extend(tuple(pt) for pt in side)
    return QuantizerSet(coords, m=p.m, n=p.m*k, k=k, r=r,
                        method='closed_form')


def optimal_set(m, n):
    """ :func:`optimal_mk_set` addressed by the total number of means. """
    m = check_sides(m)
    n = check_positive_int('n', n)
    if n % m:
        raise ValueError("Closed-form optimal sets need n to be a multiple "
                         "of m (got m={}, n={})".format(m, n))
    return optimal_mk_set(m, n//m)


def corner_error(m, r):
    """
    Distortion contributed by the m corner points:

    .. math:: \\frac{1}{24} r^3 (3 \\cos(2\\pi/m) + 5) \\csc(\\pi/m)
    """
    m = check_sides(m)
    r = check_radius(m, r, allow_zero=True)
    _, c2, csc = _trig(m)
    return r**3*(3.*c2 + 5.)*csc/24.


def side_error(m, k, r):
    """
    Distortion contributed by the m(k-1) side points:

    .. math:: \\frac{1}{3 (k-1)^2} \\csc(\\pi/m) (\\sin(\\pi/m) - r)^3
    """
    m = check_sides(m)
    k = check_positive_int('k', k, minimum=2)
    r = check_radius(m, r, allow_zero=True)
    s, _, csc = _trig(m)
    return csc*(s - r)**3/(3.*(k - 1)**2)


def total_error_of_r(m, k, r):
    """ Distortion of the symmetric m*k configuration as a function of the
    vertex radius `r` (k >= 2). """
    m = check_sides(m)
    k = check_positive_int('k', k, minimum=2)
    r = check_radius(m, r, allow_zero=True)
    s, c2, csc = _trig(m)
    return csc*(r**3*(3.*c2 + 5.) + 8./(k - 1)**2*(s - r)**3)/24.


def optimal_error(m, k):
    """
    Exact quantization error V_n for n = m*k.

    .. math::

        V_n = \\frac{2 \\sin^2(\\pi/m) (3 \\cos(2\\pi/m) + 5)}
                    {3 \\left((k-1) \\sqrt{6 \\cos(2\\pi/m) + 10} + 4\\right)^2}

    Returns
    -------
    DistortionReport with the corner and side parts evaluated at
    r = :func:`vertex_radius`. At k = 1 there are no side points and the
    side part is 0.

    """
    m = check_sides(m)
    k = check_positive_int('k', k)
    s, c2, _ = _trig(m)
    root = math.sqrt(6.*c2 + 10.)
    total = 2.*s*s*(3.*c2 + 5.)/(3.*(k*root - root + 4.)**2)

    r = vertex_radius(m, k)
    corner = corner_error(m, r)
    side = side_error(m, k, r) if k >= 2 else 0.
    params = OrderedDict([('m', m), ('n', m*k), ('k', k), ('r', r)])
    return DistortionReport(total, corner_part=corner, side_part=side,
                            method='closed_form', params=params)
