from spinwig.polytope.balls import (
    BallReport,
    ball_report,
    critical_w_min,
    inner_radius,
    lambda_star,
    outer_radius,
    tangent_points,
)
from spinwig.polytope.majorization import majorization_certificate
from spinwig.polytope.membership import (
    MembershipReport,
    admissible_range,
    is_awb,
    orbit_min,
    orbit_minimizer,
    spin_half_threshold,
)
from spinwig.polytope.vertices import (
    PolytopeVertex,
    enumerated_outer_radius,
    full_vertex_spectra,
    majorizes,
    minimal_vertices,
    vertex_majorization_pairs,
    vertex_state,
)

__all__ = [
    "BallReport",
    "MembershipReport",
    "PolytopeVertex",
    "admissible_range",
    "ball_report",
    "critical_w_min",
    "enumerated_outer_radius",
    "full_vertex_spectra",
    "inner_radius",
    "is_awb",
    "lambda_star",
    "majorization_certificate",
    "majorizes",
    "minimal_vertices",
    "orbit_min",
    "orbit_minimizer",
    "outer_radius",
    "spin_half_threshold",
    "tangent_points",
    "vertex_majorization_pairs",
    "vertex_state",
]
