"""Reduction of a Weierstrass model at a prime and point counts over the residue field."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Dict, Optional, Tuple

from ..algebra.finite_field import FiniteField
from ..exceptions import BadReduction, HasseBoundViolation, NonIntegralModel, SingularReduction
from .quadratic_field import LocalPrime
from .weierstrass import CurveModel

INFINITY = 10**9


class ReductionType(str, Enum):
    GOOD = "good"
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class ReductionData:
    kind: ReductionType
    v_c4: Optional[int]
    v_c6: Optional[int]
    v_discriminant: int
    scalings: int
    minimized: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "type": self.kind.value,
            "v_c4": self.v_c4,
            "v_c6": self.v_c6,
            "v_discriminant": self.v_discriminant,
            "scalings": self.scalings,
            "minimized": self.minimized,
        }


def _val(v: LocalPrime, a) -> int:
    n = v.valuation(a)
    return INFINITY if n is None else n


def require_integral(E: CurveModel, v: LocalPrime) -> None:
    for name, a in zip(("a1", "a2", "a3", "a4", "a6"), E.a_invariants):
        if _val(v, a) < 0:
            raise NonIntegralModel(f"{name} = {a!r} is not integral at {v}")


def reduction_data(E: CurveModel, v: LocalPrime) -> ReductionData:
    """Valuations of ``c4``, ``c6`` and ``Delta`` after ``u``-scaling.

    Scaling by a uniformizer lowers them by 4, 6 and 12; it is applied only
    when the residue characteristic is at least 5, where those three
    conditions characterize non-minimal models.
    """
    require_integral(E, v)
    vc4, vc6, vd = _val(v, E.c4), _val(v, E.c6), _val(v, E.discriminant)
    scalings = 0
    minimized = v.q >= 5
    if minimized:
        while vc4 >= 4 and vc6 >= 6 and vd >= 12:
            vc4, vc6, vd = vc4 - 4, vc6 - 6, vd - 12
            scalings += 1
    if vd == 0:
        kind = ReductionType.GOOD
    elif vc4 == 0:
        kind = ReductionType.MULTIPLICATIVE
    else:
        kind = ReductionType.ADDITIVE
    logging.debug("reduction of %s at %s: %s (v(Delta)=%d)", E, v, kind.value, vd)
    return ReductionData(
        kind,
        None if vc4 >= INFINITY // 2 else vc4,
        None if vc6 >= INFINITY // 2 else vc6,
        vd,
        scalings,
        minimized,
    )


def reduction_type(E: CurveModel, v: LocalPrime) -> ReductionType:
    return reduction_data(E, v).kind


@dataclass(frozen=True)
class ReducedCurve:
    """A Weierstrass model over a finite field of odd characteristic."""

    field: FiniteField
    a: Tuple[int, int, int, int, int]

    def discriminant(self) -> int:
        k = self.field
        a1, a2, a3, a4, a6 = self.a
        b2 = k.add(k.mul(a1, a1), k.scalar(4, a2))
        b4 = k.add(k.scalar(2, a4), k.mul(a1, a3))
        b6 = k.add(k.mul(a3, a3), k.scalar(4, a6))
        b8 = k.sub(
            k.add(
                k.add(k.mul(k.mul(a1, a1), a6), k.scalar(4, k.mul(a2, a6))),
                k.mul(a2, k.mul(a3, a3)),
            ),
            k.add(k.mul(a1, k.mul(a3, a4)), k.mul(a4, a4)),
        )
        terms = [
            k.neg(k.mul(k.mul(b2, b2), b8)),
            k.neg(k.scalar(8, k.pow(b4, 3))),
            k.neg(k.scalar(27, k.mul(b6, b6))),
            k.scalar(9, k.mul(b2, k.mul(b4, b6))),
        ]
        out = 0
        for t in terms:
            out = k.add(out, t)
        return out

    def count_points(self) -> int:
        """Affine solutions plus the point at infinity.

        With ``y -> y - (a1 x + a3)/2`` the equation becomes ``y^2 = f(x)``.
        """
        k = self.field
        if k.p == 2:
            raise SingularReduction("characteristic 2 is not supported")
        if self.discriminant() == 0:
            raise SingularReduction(f"reduction {self.a} over {k} is singular")
        a1, a2, a3, a4, a6 = self.a
        half = k.inv(2 % k.p)
        total = 1
        for x in k.elements():
            fx = k.add(
                k.add(k.pow(x, 3), k.mul(a2, k.mul(x, x))), k.add(k.mul(a4, x), a6)
            )
            shift = k.mul(k.add(k.mul(a1, x), a3), half)
            total += 1 + k.quadratic_character(k.add(fx, k.mul(shift, shift)))
        q = k.order
        trace = q + 1 - total
        if trace * trace > 4 * q:
            raise HasseBoundViolation(f"#E = {total} over GF({q}) violates |a| <= 2 sqrt(q)")
        logging.debug("#E(GF(%d)) = %d for %s", q, total, self.a)
        return total

    def trace(self) -> int:
        return self.field.order + 1 - self.count_points()


def reduce_at(E: CurveModel, v: LocalPrime) -> ReducedCurve:
    """Reduce the model that ``reduction_data`` classified.

    A model that needed ``u``-scaling is replaced by
    ``y^2 = x^3 - 27 (c4/u^4) x - 54 (c6/u^6)``, which is isomorphic to it
    over any field of characteristic at least 5.
    """
    data = reduction_data(E, v)
    if data.scalings:
        u = v.uniformizer
        c4 = E.c4 / u ** (4 * data.scalings)
        c6 = E.c6 / u ** (6 * data.scalings)
        coefficients = (0, 0, 0, -27 * c4, -54 * c6)
    else:
        coefficients = E.a_invariants
    a = tuple(v.reduce(c) for c in coefficients)
    return ReducedCurve(v.residue_field, a)  # type: ignore[arg-type]


def count_points(E: CurveModel, v: LocalPrime) -> int:
    """``#E(k_v)`` for the reduction of ``E`` at ``v``; needs good reduction."""
    if reduction_type(E, v) is not ReductionType.GOOD:
        raise BadReduction(f"{E} does not have good reduction at {v}")
    return reduce_at(E, v).count_points()


def hasse_interval(q: int) -> Tuple[int, int]:
    width = isqrt(4 * q)
    return q + 1 - width, q + 1 + width


def is_supersingular(E: CurveModel, v: LocalPrime) -> bool:
    if reduction_type(E, v) is not ReductionType.GOOD:
        raise BadReduction(f"{E} does not have good reduction at {v}")
    trace = reduce_at(E, v).trace()
    return trace % v.q == 0


__all__ = [
    "ReducedCurve",
    "ReductionData",
    "ReductionType",
    "count_points",
    "hasse_interval",
    "is_supersingular",
    "reduce_at",
    "reduction_data",
    "reduction_type",
    "require_integral",
]
