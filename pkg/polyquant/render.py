"""
Static SVG pictures of a quantizer set on a polygon boundary.
"""

import math

import numpy as np

from .common import DEFAULT_SVG_SIZE, check_positive_int
from .oracle import cell_breakpoints

#: Half-width of the plotted square in circumradius units
VIEW_EXTENT = 1.1

#: Length of a breakpoint tick in circumradius units
TICK_LENGTH = 0.05

#: Radius of a quantizer-point marker in pixels
POINT_RADIUS = 3.5


def to_pixels(xy, size):
    """ Map plane coordinates in [-1.1, 1.1]^2 onto a square of `size` pixels
    with the y axis pointing down. """
    xy = np.asarray(xy, dtype=float)
    px = (xy[..., 0] + VIEW_EXTENT)/(2.*VIEW_EXTENT)*size
    py = (VIEW_EXTENT - xy[..., 1])/(2.*VIEW_EXTENT)*size
    return px, py


def _fmt(value):
    return "{:.3f}".format(value)


def render_svg(p, q, cells=None, size=DEFAULT_SVG_SIZE):
    """
    Draw the unit circle, the polygon, the quantizer points and a tick at
    every boundary breakpoint between Voronoi cells.

    Parameters
    ----------
    p : RegularPolygon
    q : QuantizerSet
    cells : list of BoundaryCell, optional
        Cells of `q`; no ticks are drawn when omitted.
    size : int
        Edge length of the square image in pixels.

    Returns
    -------
    str
        A complete SVG document.

    """
    size = check_positive_int('size', size)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" '
        'viewBox="0 0 {0} {0}">'.format(size),
        '<rect width="{0}" height="{0}" fill="white"/>'.format(size),
    ]

    cx, cy = to_pixels((0., 0.), size)
    radius = size/(2.*VIEW_EXTENT)
    lines.append('<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#bbbbbb"'
                 ' stroke-dasharray="4 4"/>'
                 .format(_fmt(cx), _fmt(cy), _fmt(radius)))

    px, py = to_pixels(p.vertex_array, size)
    poly = " ".join("{},{}".format(_fmt(x), _fmt(y)) for x, y in zip(px, py))
    lines.append('<polygon points="{}" fill="none" stroke="black" '
                 'stroke-width="1.5"/>'.format(poly))

    if cells is not None:
        lines.append('<g stroke="#d62728" stroke-width="1.5">')
        for j, t in cell_breakpoints(p, cells):
            start, end = p.side_endpoints(j)
            # ticks run along the inward normal of the side
            mid = 0.5*(start + end)
            normal = -mid/np.hypot(*mid)
            base = p.side_points(j, t)
            tip = base + TICK_LENGTH*normal
            (x0, x1), (y0, y1) = to_pixels(np.array([base, tip]), size)
            lines.append('<line x1="{}" y1="{}" x2="{}" y2="{}"/>'
                         .format(_fmt(x0), _fmt(y0), _fmt(x1), _fmt(y1)))
        lines.append('</g>')

    qx, qy = to_pixels(q.coords, size)
    lines.append('<g fill="#1f77b4">')
    for x, y in zip(qx, qy):
        lines.append('<circle cx="{}" cy="{}" r="{}"/>'
                     .format(_fmt(x), _fmt(y), _fmt(POINT_RADIUS)))
    lines.append('</g>')

    title = "m={} n={}".format(p.m, q.n)
    if q.r is not None and not math.isnan(q.r):
        title += " r={:.7f}".format(q.r)
    lines.append('<text x="10" y="20" font-family="sans-serif" '
                 'font-size="14">{}</text>'.format(title))
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
