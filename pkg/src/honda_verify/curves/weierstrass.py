"""Weierstrass models over ``Q`` and real or imaginary quadratic fields."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Dict, Sequence, Tuple

from ..exceptions import CurveError, CurveSpecError, SingularCurve
from .quadratic_field import QuadElement, QuadraticField, Scalar, parse_field


@dataclass(frozen=True)
class CurveModel:
    """``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`` over ``base``."""

    base: QuadraticField
    a1: QuadElement
    a2: QuadElement
    a3: QuadElement
    a4: QuadElement
    a6: QuadElement

    @classmethod
    def from_coefficients(cls, base: QuadraticField, coeffs: Sequence[Scalar]) -> "CurveModel":
        if len(coeffs) != 5:
            raise CurveSpecError(f"expected 5 coefficients, got {len(coeffs)}")
        a = [base(c) for c in coeffs]
        model = cls(base, *a)
        model.check_identities()
        if model.discriminant.is_zero():
            raise SingularCurve(f"{model} has zero discriminant")
        return model

    @property
    def a_invariants(self) -> Tuple[QuadElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @cached_property
    def b_invariants(self) -> Dict[str, QuadElement]:
        a1, a2, a3, a4, a6 = self.a_invariants
        return {
            "b2": a1 * a1 + 4 * a2,
            "b4": 2 * a4 + a1 * a3,
            "b6": a3 * a3 + 4 * a6,
            "b8": a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4,
        }

    @property
    def c4(self) -> QuadElement:
        b = self.b_invariants
        return b["b2"] ** 2 - 24 * b["b4"]

    @property
    def c6(self) -> QuadElement:
        b = self.b_invariants
        return -(b["b2"] ** 3) + 36 * b["b2"] * b["b4"] - 216 * b["b6"]

    @cached_property
    def discriminant(self) -> QuadElement:
        b = self.b_invariants
        b2, b4, b6, b8 = b["b2"], b["b4"], b["b6"], b["b8"]
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self) -> QuadElement:
        if self.discriminant.is_zero():
            raise SingularCurve(f"{self} has zero discriminant")
        return self.c4**3 / self.discriminant

    def check_identities(self) -> None:
        b = self.b_invariants
        if 1728 * self.discriminant != self.c4**3 - self.c6**2:
            raise CurveError("1728 * Delta != c4^3 - c6^2")
        if 4 * b["b8"] != b["b2"] * b["b6"] - b["b4"] ** 2:
            raise CurveError("4 * b8 != b2 * b6 - b4^2")

    def invariants(self) -> Dict[str, object]:
        """b-invariants, ``c4``, ``c6``, ``Delta`` and ``j`` as strings."""
        self.check_identities()
        out: Dict[str, object] = {k: repr(v) for k, v in self.b_invariants.items()}
        out.update(
            {
                "c4": repr(self.c4),
                "c6": repr(self.c6),
                "discriminant": repr(self.discriminant),
                "j": repr(self.j_invariant),
            }
        )
        return out

    def __str__(self) -> str:
        coeffs = ",".join(repr(a) for a in self.a_invariants)
        return f"[{coeffs}] over {self.base}"

    def contains(self, x: Scalar, y: Scalar) -> bool:
        x, y = self.base(x), self.base(y)
        a1, a2, a3, a4, a6 = self.a_invariants
        lhs = y * y + a1 * x * y + a3 * y
        return lhs == x**3 + a2 * x * x + a4 * x + a6


def curve_invariants(E: CurveModel) -> Dict[str, object]:
    """Standard Weierstrass quantities with ``1728 Delta = c4^3 - c6^2`` checked."""
    return E.invariants()


def quadratic_twist(E: CurveModel, d: int) -> CurveModel:
    """The model ``y^2 = x^3 - 27 d^2 c4 x - 54 d^3 c6``."""
    zero = E.base(0)
    return CurveModel.from_coefficients(
        E.base, [zero, zero, zero, -27 * d * d * E.c4, -54 * d**3 * E.c6]
    )


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, m = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(m) ** 2 == m


def is_twist_by(E: CurveModel, E2: CurveModel, d: int) -> bool:
    """Whether ``E2`` is isomorphic over the base to the twist of ``E`` by ``d``.

    Needs rational ``c6`` (curves over ``Q``) with ``c6 != 0``.
    """
    if E.j_invariant != E2.j_invariant:
        return False
    if E.c6.is_zero() or E2.c6.is_zero():
        raise CurveError("twist test needs c6 != 0")
    ratio = E2.c6 * d / E.c6
    if not ratio.is_rational():
        raise CurveError("twist test is implemented for curves over Q")
    return _is_rational_square(ratio.x)


def parse_curve_spec(text: str) -> CurveModel:
    """``a1,a2,a3,a4,a6 over Q(sqrt(d))``; coefficients are ``x+y*s``."""
    head, sep, tail = text.partition(" over ")
    if not sep:
        raise CurveSpecError(f"missing ' over <field>' in {text!r}")
    base = parse_field(tail)
    parts = [p.strip() for p in head.strip().strip("[]").split(",")]
    if len(parts) != 5 or not all(parts):
        raise CurveSpecError(f"expected five comma separated coefficients in {text!r}")
    model = CurveModel.from_coefficients(base, [base.parse(p) for p in parts])
    logging.debug("parsed curve %s", model)
    return model


__all__ = [
    "CurveModel",
    "curve_invariants",
    "is_twist_by",
    "parse_curve_spec",
    "quadratic_twist",
]
