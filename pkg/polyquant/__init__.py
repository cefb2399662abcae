
try:
    from . version import __version__
except ImportError:
    __version__ = 'unknown'

from . geometry import (Point2, RegularPolygon, BoundaryMeasure, polygon_new,
                        side_point)
from . segment import SegmentSpec, segment_optimal_points, segment_quant_error
from . polygon import (QuantizerSet, DistortionReport, vertex_radius,
                       corner_points, side_points, optimal_mk_set,
                       optimal_set, corner_error, side_error,
                       total_error_of_r, optimal_error)
from . coefficient import (quant_coefficient, convergence_table,
                           circle_coefficient)
from . oracle import (voronoi_cells_on_boundary, distortion_quadrature,
                      lloyd_step, lloyd_solve, minimize_over_r)
from . core import convergence_dataset, sweep_frame, validate
