"""
Quantization coefficients lim n^2 V_n for the uniform distribution on the
boundary of a regular m-gon, and their limit as the polygon approaches the
unit circle.
"""

from collections import namedtuple

import math

import numpy as np

from .common import check_positive_int, check_sides
from .polygon import optimal_error, vertex_radius

#: One row of a convergence table for n = m*k
ConvergenceRow = namedtuple('ConvergenceRow',
                            ['n', 'k', 'Vn', 'scaled', 'deviation'])


def _check_sides_array(m, integer=True):
    arr = np.asarray(m)
    if integer and not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("`m` must be an integer or integer array (got {!r})"
                         .format(m))
    if np.any(arr < 3):
        raise ValueError("`m` must be >= 3 (got {!r})".format(m))
    return arr


def quant_coefficient(m):
    """
    Quantization coefficient (1/3) m^2 sin^2(pi/m) of the m-gon boundary.

    Accepts an integer or an integer array (evaluated elementwise).
    """
    if np.ndim(m) == 0:
        m = check_sides(m)
        s = math.sin(math.pi/m)
        return m*m*s*s/3.
    arr = _check_sides_array(m).astype(float)
    s = np.sin(np.pi/arr)
    return arr*arr*s*s/3.


def coefficient_derivative(m):
    """
    Derivative of :func:`quant_coefficient` with m treated as a real:

    .. math:: \\frac{2}{3} \\sin(\\pi/m) (m \\sin(\\pi/m) - \\pi \\cos(\\pi/m))

    which is positive for every m >= 3.
    """
    if np.ndim(m) == 0:
        m = float(m)
        if not m >= 3:
            raise ValueError("`m` must be >= 3 (got {})".format(m))
        s, c = math.sin(math.pi/m), math.cos(math.pi/m)
        return 2./3.*s*(m*s - math.pi*c)
    arr = _check_sides_array(m, integer=False).astype(float)
    s, c = np.sin(np.pi/arr), np.cos(np.pi/arr)
    return 2./3.*s*(arr*s - np.pi*c)


def circle_coefficient():
    """ Quantization coefficient pi^2/3 of the uniform distribution on the
    unit circle, the m -> infinity limit of :func:`quant_coefficient`. """
    return math.pi**2/3.


def coefficient_gap(m):
    """ pi^2/3 - quant_coefficient(m); positive for every m >= 3. """
    return circle_coefficient() - quant_coefficient(m)


def gap_asymptote(m):
    """ Leading term pi^4/(9 m^2) of :func:`coefficient_gap`. """
    if np.ndim(m) == 0:
        return math.pi**4/(9.*float(m)**2)
    return math.pi**4/(9.*np.asarray(m, dtype=float)**2)


def scaled_error(m, k):
    """ n^2 V_n for n = m*k. """
    n = check_sides(m)*check_positive_int('k', k)
    return n*n*optimal_error(m, k).total


def convergence_table(m, k_values):
    """
    Tabulate n^2 V_n against the quantization coefficient.

    Parameters
    ----------
    m : int
        Number of sides.
    k_values : iterable of int
        Values of k (each >= 1); rows follow the given order.

    Returns
    -------
    list of ConvergenceRow, one per k, with n = m*k, Vn the exact error,
    scaled = n^2 Vn and deviation = scaled - quant_coefficient(m).

    """
    m = check_sides(m)
    coefficient = quant_coefficient(m)
    rows = []
    for k in k_values:
        k = check_positive_int('k', k)
        n = m*k
        vn = optimal_error(m, k).total
        scaled = n*n*vn
        rows.append(ConvergenceRow(n, k, vn, scaled, scaled - coefficient))
    return rows


def sandwich_bounds(m, n):
    """
    Bounds on n^2 V_n from the neighbouring multiples of m.

    For n >= 2m write k = floor(n/m), so that m k <= n < m (k+1). Since V_n
    is decreasing in n,

    .. math:: (m k)^2 V_{m(k+1)} < n^2 V_n < (m (k+1))^2 V_{mk}

    and both bounds converge to the quantization coefficient.

    Returns
    -------
    (lower, upper) : tuple of float

    """
    m = check_sides(m)
    n = check_positive_int('n', n)
    if n < 2*m:
        raise ValueError("The bounds need n >= 2m (got m={}, n={})"
                         .format(m, n))
    k = n//m
    lower = (m*k)**2*optimal_error(m, k + 1).total
    upper = (m*(k + 1))**2*optimal_error(m, k).total
    return lower, upper


def convergence_arrays(sides, ks):
    """ Evaluate r, V_n, n^2 V_n on the (m, k) grid; used by
    :func:`polyquant.core.convergence_dataset`. """
    sides = [check_sides(m) for m in sides]
    ks = [check_positive_int('k', k) for k in ks]
    shape = (len(sides), len(ks))
    n = np.empty(shape, dtype=int)
    r = np.empty(shape)
    vn = np.empty(shape)
    for i, m in enumerate(sides):
        for j, k in enumerate(ks):
            n[i, j] = m*k
            r[i, j] = vertex_radius(m, k)
            vn[i, j] = optimal_error(m, k).total
    coefficient = quant_coefficient(np.asarray(sides, dtype=int))
    scaled = n.astype(float)**2*vn
    return dict(n=n, r=r, Vn=vn, scaled=scaled, coefficient=coefficient,
                deviation=scaled - coefficient[:, np.newaxis])
