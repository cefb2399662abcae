"""
Optimal n-means for the uniform distribution on a line segment AB,
restricted to a trimmed sub-segment D1D2.

D1 and D2 lie at distances ``r1`` from A and ``r2`` from B. The measure is
the uniform density 1/l over all of AB, restricted (without renormalization)
to D1D2.
"""

import math

import numpy as np

from .common import check_positive_int
from .geometry import Point2, squared_distance
from .polygon import QuantizerSet


class SegmentSpec(object):
    """
    A line segment AB with trim distances defining the sub-segment D1D2.

    Parameters
    ----------
    a, b : pair of float
        Position vectors of the endpoints A = M(0) and B = M(1).
    r1, r2 : float
        Trim distances from A and from B, in the same length units as the
        segment; r1, r2 >= 0 and r1 + r2 < length.

    """

    __slots__ = ('a', 'b', 'length', 'r1', 'r2')

    def __init__(self, a, b, r1=0., r2=0.):
        a, b = Point2(*a), Point2(*b)
        length = math.sqrt(squared_distance(a, b))
        if not length > 0:
            raise ValueError("Segment endpoints must be distinct")
        r1, r2 = float(r1), float(r2)
        if not (r1 >= 0 and r2 >= 0):
            raise ValueError("Trim distances must be non-negative "
                             "(got r1={}, r2={})".format(r1, r2))
        if not r1 + r2 < length:
            raise ValueError("Trimmed sub-segment is empty (r1 + r2 = {} "
                             ">= length = {})".format(r1 + r2, length))
        self.a = a
        self.b = b
        self.length = length
        self.r1 = r1
        self.r2 = r2

    def __repr__(self):
        return ("SegmentSpec(a={}, b={}, r1={}, r2={})"
                .format(tuple(self.a), tuple(self.b), self.r1, self.r2))

    @property
    def inner_length(self):
        """ Length of D1D2, l - r1 - r2. """
        return self.length - self.r1 - self.r2

    @property
    def t_lo(self):
        return self.r1/self.length

    @property
    def t_hi(self):
        return 1. - self.r2/self.length

    def point(self, t):
        """ M(t) = t*b + (1 - t)*a. """
        return Point2(*self.points(t))

    def points(self, t):
        """ Vectorized :meth:`point`, returning an array of shape
        ``t.shape + (2, )``. """
        t = np.asarray(t, dtype=float)[..., np.newaxis]
        return t*np.asarray(self.b) + (1. - t)*np.asarray(self.a)

    @property
    def d1(self):
        return self.point(self.t_lo)

    @property
    def d2(self):
        return self.point(self.t_hi)


def optimal_parameters(seg, n):
    """ Parameters t of the optimal n-means of D1D2, in increasing order. """
    n = check_positive_int('n', n)
    j = np.arange(1, n + 1)
    span = 1. - seg.r2/seg.length - seg.r1/seg.length
    return seg.r1/seg.length + (2*j - 1)/(2.*n)*span


def segment_optimal_points(seg, n):
    """
    Optimal set of n-means for the uniform measure on D1D2.

    Parameters
    ----------
    seg : SegmentSpec
    n : int
        Number of means, n >= 1.

    Returns
    -------
    QuantizerSet with the points M(r1/l + (2j-1)/(2n)(1 - r2/l - r1/l)),
    j = 1..n, in increasing parameter order (method "closed_form"; ``m``
    is None since the set does not belong to a polygon).

    """
    t = optimal_parameters(seg, n)
    return QuantizerSet(seg.points(t), m=None, n=len(t), method='closed_form')


def segment_quant_error(seg, n):
    """
    The n-th quantization error of the uniform measure (density 1/l on AB)
    restricted to D1D2.

    Notes
    -----
    Evaluating n * int rho(M(t), M(t0)) dmu over the first cell with
    rho(M(t), M(t0)) = l^2 (t - t0)^2 and dmu = dt gives

    .. math:: V_n = (l - r_1 - r_2)^3 / (12 n^2 l)

    which :func:`polyquant.oracle.segment_error_quadrature` checks directly.

    """
    n = check_positive_int('n', n)
    return seg.inner_length**3/(12.*n*n*seg.length)
