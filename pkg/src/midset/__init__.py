"""midset: convexity points of planar convex bodies via middle sets.

Exact mode works on rational polygons with zero tolerance; numeric mode
exercises the smooth-support-function calculus the polygon mode bypasses.
"""

from .convexity import (
    ConvexityCertificate,
    InterceptProfile,
    is_convexity_point_char,
    is_convexity_point_direct,
    middle_intercept_profile,
    theorem_points,
    witness_nonconvexity,
)
from .decompose import Decomposition, decompose, extract_parallel_summand, verify_decomposition
from .geom import (
    Body,
    Direction,
    Face,
    GeometryError,
    Line,
    Point,
    affine_dim,
    contains,
    face,
    hull,
    is_convex_union,
    midpoint,
    minkowski_sum,
    reflect,
    support,
)
from .middle import (
    AntipodalEvent,
    MiddleSegment,
    SymmetryResult,
    a_body,
    antipodal_events,
    exposed_points,
    has_parallel_edges,
    is_centrally_symmetric,
    middle_line,
    middle_set,
    p_value,
)
from .smooth import (
    FdCheck,
    SmoothBody,
    SmoothBodyError,
    ZCurveSample,
    a_body_approx,
    fd_check_lemma4,
    make_smooth_body,
    symmetry_residual,
    z_curve,
)

__version__ = "0.1.0"

__all__ = [
    "AntipodalEvent",
    "Body",
    "ConvexityCertificate",
    "Decomposition",
    "Direction",
    "Face",
    "FdCheck",
    "GeometryError",
    "InterceptProfile",
    "Line",
    "MiddleSegment",
    "Point",
    "SmoothBody",
    "SmoothBodyError",
    "SymmetryResult",
    "ZCurveSample",
    "a_body",
    "a_body_approx",
    "affine_dim",
    "antipodal_events",
    "contains",
    "decompose",
    "exposed_points",
    "extract_parallel_summand",
    "face",
    "fd_check_lemma4",
    "has_parallel_edges",
    "hull",
    "is_centrally_symmetric",
    "is_convex_union",
    "is_convexity_point_char",
    "is_convexity_point_direct",
    "make_smooth_body",
    "middle_intercept_profile",
    "middle_line",
    "middle_set",
    "midpoint",
    "minkowski_sum",
    "p_value",
    "reflect",
    "support",
    "symmetry_residual",
    "theorem_points",
    "verify_decomposition",
    "witness_nonconvexity",
    "z_curve",
]
