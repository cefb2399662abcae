from datetime import datetime

import math
import numbers

#: Largest supported number of polygon sides; keeps csc(pi/m) well away
#: from overflow.
MAX_SIDES = 10**6

#: Default agreement tolerance for validation runs
DEFAULT_TOL = 1e-9

#: Default number of Gauss-Legendre nodes per boundary arc
DEFAULT_NODES = 8

#: Default seed for randomized Lloyd initializations
DEFAULT_SEED = 0

#: Default edge length (pixels) of rendered SVG images
DEFAULT_SVG_SIZE = 800

#: Number of uniform parameter samples per side used to detect owner changes
SCAN_POINTS = 4096

#: Bracket width (in side parameter t) at which breakpoint bisection stops
BISECT_TOL = 1e-12

#: Iteration cap for Lloyd solves
LLOYD_MAX_ITER = 1000

#: Magnitude of the uniform noise added to closed-form sets for "perturbed"
#: Lloyd initializations
PERTURB_NOISE = 1e-3

#: Number of boundary samples used by the fine-sampling distortion estimate
FINE_SAMPLES = 10**6

#: Allowed distortion increase per Lloyd step before we call it out
MONOTONE_SLACK = 1e-13

#: Relative tolerance above l/2 accepted for vertex radii
RADIUS_SLACK = 1e-12


def get_timestamp(time=True, date=True, fmt=None):
    """ Return the current timestamp in machine local time.

    Parameters:
    -----------
    time, date : Boolean
        Flag to include the time or date components, respectively,
        in the output.
    fmt : str, optional
        If passed, will override the time/date choice and use as
        the format string passed to `strftime`.
    """

    time_format = "%H:%M:%S"
    date_format = "%m-%d-%Y"

    if fmt is None:
        if time and date:
            fmt = time_format + " " + date_format
        elif time:
            fmt = time_format
        elif date:
            fmt = date_format
        else:
            raise ValueError("One of `date` or `time` must be True!")

    return datetime.now().strftime(fmt)


def _is_integer(value):
    return (isinstance(value, numbers.Integral)
            and not isinstance(value, bool))


def check_positive_int(name, value, minimum=1):
    """ Validate that `value` is an integer no smaller than `minimum` and
    return it as a plain int. """
    if not _is_integer(value):
        raise ValueError("`{}` must be an integer (got {!r})"
                         .format(name, value))
    if value < minimum:
        raise ValueError("`{}` must be >= {} (got {})"
                         .format(name, minimum, value))
    return int(value)


def check_sides(m):
    """ Validate a number of polygon sides, 3 <= m <= MAX_SIDES. """
    m = check_positive_int('m', m, minimum=3)
    if m > MAX_SIDES:
        raise ValueError("`m` must be <= {} (got {})".format(MAX_SIDES, m))
    return m


def check_positive(name, value):
    """ Validate a strictly positive, finite real. """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValueError("`{}` must be a real number (got {!r})"
                         .format(name, value))
    if not (math.isfinite(value) and value > 0):
        raise ValueError("`{}` must be positive and finite (got {})"
                         .format(name, value))
    return value


def half_side(m):
    """ Half the side length of the unit-circumradius m-gon, sin(pi/m). """
    return math.sin(math.pi / m)


def check_radius(m, r, allow_zero=False):
    """ Validate a vertex radius against the admissible range of the m-gon.

    The range is (0, l/2] or, with `allow_zero`, [0, l/2], where l/2 is
    evaluated as sin(pi/m). Values within RADIUS_SLACK (relative) above l/2
    are accepted and clamped to it, so that e.g. r = 0.5 is valid for the
    hexagon although sin(pi/6) rounds below 0.5.
    """
    try:
        r = float(r)
    except (TypeError, ValueError):
        raise ValueError("`r` must be a real number (got {!r})".format(r))
    upper = half_side(m)
    lower_ok = (r >= 0.) if allow_zero else (r > 0.)
    upper_ok = r <= upper*(1. + RADIUS_SLACK)
    if not (math.isfinite(r) and lower_ok and upper_ok):
        raise ValueError(
            "`r` must lie in {}0, {!r}] for m={} (got {!r})"
            .format('[' if allow_zero else '(', upper, m, r)
        )
    return min(r, upper)
