"""Elliptic curves over ``Q`` and quadratic fields: reduction, formal groups, torsion."""

from .formal import (
    InertiaType,
    NewtonPolygon,
    formal_log,
    formal_mult_p,
    formal_w,
    invariant_differential,
    newton_polygon,
    tame_inertia,
    tame_inertia_type,
)
from .quadratic_field import LocalPrime, QuadElement, QuadraticField, parse_field, parse_prime
from .reduction import (
    ReductionType,
    count_points,
    is_supersingular,
    reduce_at,
    reduction_data,
    reduction_type,
)
from .sylow2 import sylow2_check
from .torsion import (
    parse_assumptions,
    rational_points,
    torsion_bound,
    x015_model,
    x015_report,
    x0_cusp_count,
)
from .weierstrass import CurveModel, curve_invariants, is_twist_by, parse_curve_spec, quadratic_twist

__all__ = [
    "CurveModel",
    "InertiaType",
    "LocalPrime",
    "NewtonPolygon",
    "QuadElement",
    "QuadraticField",
    "ReductionType",
    "count_points",
    "curve_invariants",
    "formal_log",
    "formal_mult_p",
    "formal_w",
    "invariant_differential",
    "is_supersingular",
    "is_twist_by",
    "newton_polygon",
    "parse_assumptions",
    "parse_curve_spec",
    "parse_field",
    "parse_prime",
    "quadratic_twist",
    "rational_points",
    "reduce_at",
    "reduction_data",
    "reduction_type",
    "sylow2_check",
    "tame_inertia",
    "tame_inertia_type",
    "torsion_bound",
    "x015_model",
    "x015_report",
    "x0_cusp_count",
]
