"""Piercing, coloring, and exact oracles for bounded-aspect-ratio rectangles.

A transversal construction with machine-checkable certificates (point set
plus pairwise-disjoint witness), a degeneracy-based greedy coloring, exact
brute-force oracles for small instances, an independent verifier, seeded
generators, and SVG rendering. All geometry is exact rational arithmetic.
"""

from .coloring import (
    Coloring,
    greedy_degeneracy_coloring,
    parse_coloring,
    serialize_coloring,
    validate_coloring,
)
from .errors import (
    BudgetExceededError,
    GeometryError,
    InstanceTooLargeError,
    InvariantViolation,
    RectPierceError,
    SchemaError,
    UsageError,
)
from .exact import (
    ExactLimits,
    candidate_points,
    exact_chi,
    exact_nu,
    exact_omega_clique,
    exact_tau,
)
from .geometry import (
    Box,
    Point,
    Rect,
    aspect_ratio,
    common_box,
    contains_point,
    intersection,
    intersects,
    longer_side,
    shorter_side,
    snap_point,
)
from .graph import (
    DegeneracyOrder,
    IntersectionGraph,
    build_graph_bruteforce,
    build_graph_sweep,
    degeneracy_order,
    max_depth_omega,
)
from .instance import (
    STRUCTURED_KINDS,
    GeneratorConfig,
    Instance,
    SplitMix64,
    family_ratio,
    generate_random,
    generate_structured,
    parse_instance,
    serialize_instance,
)
from .kernels import BACKEND
from .pierce import (
    PiercingResult,
    TraceStep,
    construct_transversal,
    edge_grid_points,
    grid_segments,
    helly_point,
    parse_piercing,
    select_min_rect,
    serialize_piercing,
)
from .render import RenderStyle, render_svg
from .scalar import Scalar, as_scalar, format_scalar, parse_ratio, parse_scalar
from .verify import (
    Check,
    VerificationReport,
    batch_stats,
    serialize_report,
    verify_coloring_bounds,
    verify_piercing,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Box",
    "BudgetExceededError",
    "Check",
    "Coloring",
    "DegeneracyOrder",
    "ExactLimits",
    "GeneratorConfig",
    "GeometryError",
    "Instance",
    "InstanceTooLargeError",
    "IntersectionGraph",
    "InvariantViolation",
    "PiercingResult",
    "Point",
    "Rect",
    "RectPierceError",
    "RenderStyle",
    "STRUCTURED_KINDS",
    "Scalar",
    "SchemaError",
    "SplitMix64",
    "TraceStep",
    "UsageError",
    "VerificationReport",
    "as_scalar",
    "aspect_ratio",
    "batch_stats",
    "build_graph_bruteforce",
    "build_graph_sweep",
    "candidate_points",
    "common_box",
    "construct_transversal",
    "contains_point",
    "degeneracy_order",
    "edge_grid_points",
    "exact_chi",
    "exact_nu",
    "exact_omega_clique",
    "exact_tau",
    "family_ratio",
    "format_scalar",
    "generate_random",
    "generate_structured",
    "greedy_degeneracy_coloring",
    "grid_segments",
    "helly_point",
    "intersection",
    "intersects",
    "longer_side",
    "max_depth_omega",
    "parse_coloring",
    "parse_instance",
    "parse_piercing",
    "parse_ratio",
    "parse_scalar",
    "render_svg",
    "select_min_rect",
    "serialize_coloring",
    "serialize_instance",
    "serialize_piercing",
    "serialize_report",
    "shorter_side",
    "snap_point",
    "validate_coloring",
    "verify_coloring_bounds",
    "verify_piercing",
    "__version__",
]
