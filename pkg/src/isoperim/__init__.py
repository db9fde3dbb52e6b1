"""Isoperimetric problems in convex planar regions."""
from .body import ConvexBody, body_area, body_area_grad, body_perimeter, body_perimeter_grad
from .errors import (
    DegenerateInputError,
    InfeasibleError,
    IsoperimError,
    NumericalError,
    RejectedInputError,
    UnsupportedOperationError,
)
from .geom import HalfPlane, Polygon, clip_halfplane, convex_hull, diameter, polygon_area, polygon_perimeter
from .profile import ProfileTable, cusp_nonexistence_profile, profile_a, profile_ell, reciprocity_check
from .region import Incircle, Region, inradius, region_area, region_perimeter, support_value, truncate
from .slicing import SliceResult, slice_to_area, strict_decrease_check, volume_cut
from .solver import (
    NonexistenceReport,
    NonexistenceWarning,
    SolveReport,
    SolverConfig,
    comb_sequence,
    nonexistence_demo,
    solve_P,
    solve_Pstar,
    solve_unbounded,
    translate_to_incircle,
    truncation_sequence,
)

__all__ = [
    "ConvexBody",
    "DegenerateInputError",
    "HalfPlane",
    "Incircle",
    "InfeasibleError",
    "IsoperimError",
    "NonexistenceReport",
    "NonexistenceWarning",
    "NumericalError",
    "Polygon",
    "ProfileTable",
    "Region",
    "RejectedInputError",
    "SliceResult",
    "SolveReport",
    "SolverConfig",
    "UnsupportedOperationError",
    "body_area",
    "body_area_grad",
    "body_perimeter",
    "body_perimeter_grad",
    "clip_halfplane",
    "comb_sequence",
    "convex_hull",
    "cusp_nonexistence_profile",
    "diameter",
    "inradius",
    "nonexistence_demo",
    "polygon_area",
    "polygon_perimeter",
    "profile_a",
    "profile_ell",
    "reciprocity_check",
    "region_area",
    "region_perimeter",
    "slice_to_area",
    "solve_P",
    "solve_Pstar",
    "solve_unbounded",
    "strict_decrease_check",
    "support_value",
    "translate_to_incircle",
    "truncate",
    "truncation_sequence",
    "volume_cut",
]
