"""Polytope approximation of convex bodies by minimal width and diameter.

The library constructs inscribed polytopes whose minimal width is a certified
fraction of the body's, and circumscribed polytopes whose diameter exceeds
the body's by a certified factor, both driven by families of lines through
the origin with small covering radius.
"""

from .bodies import (Ball, CompletionBody, ConvexBody, GeometryError,
                     Polytope, ReuleauxPolygon, SmoothedPolygon, convex_hull,
                     disk, support, width)
from .chords import (Chord, central_symmetrization, chord_length,
                     diametral_chord, difference_body, segments_intersect)
from .circumscribe import (CompletionResult, ball_hull,
                           circumscribe_small_diameter,
                           complete_to_constant_width_2d, delta_table,
                           delta_upper_bound, regular_circumscribed_ngon)
from .diskngons import (InscribedNgon, best_known_hexagon, best_known_octagon,
                        deltoid_family, hexagon_flex, regular_odd_ngon,
                        search_ngon, widest_deltoid)
from .halfspaces import Strip, halfspace_intersection
from .inscribe import (BoundReport, InscriptionResult, inscribe_wide_polytope,
                       lambda_lower_bound, lambda_table, verify_inscription)
from .linefamilies import (LineFamily, covering_radius, icosahedral_family,
                           literature_bounds_3d, optimize_family,
                           orthogonal_axes, planar_family, plus_one_family)
from .measure import diameter, min_width
from .triangle import (QuadFrame, balanced_chord_direction,
                       inscribe_regular_triangle)

__version__ = "0.1.0"

__all__ = [
    "Ball", "BoundReport", "Chord", "CompletionBody", "CompletionResult",
    "ConvexBody", "GeometryError", "InscribedNgon", "InscriptionResult",
    "LineFamily", "Polytope", "QuadFrame", "ReuleauxPolygon",
    "SmoothedPolygon", "Strip", "ball_hull", "balanced_chord_direction",
    "best_known_hexagon", "best_known_octagon", "central_symmetrization",
    "chord_length", "circumscribe_small_diameter",
    "complete_to_constant_width_2d", "convex_hull", "covering_radius",
    "deltoid_family", "delta_table", "delta_upper_bound", "diameter",
    "diametral_chord", "difference_body", "disk", "halfspace_intersection",
    "hexagon_flex", "icosahedral_family", "inscribe_regular_triangle",
    "inscribe_wide_polytope", "lambda_lower_bound", "lambda_table",
    "literature_bounds_3d", "min_width", "optimize_family",
    "orthogonal_axes", "planar_family", "plus_one_family",
    "regular_circumscribed_ngon", "regular_odd_ngon", "search_ngon",
    "segments_intersect", "support", "verify_inscription", "width",
    "widest_deltoid",
]
