"""The formal group of a Weierstrass model and the Newton polygon of ``[p]``.

Series live in a sympy sparse ring ``K[t, u]`` over ``K = Q(sqrt(d))`` and
are truncated in ``t`` with :mod:`sympy.polys.ring_series`; the second
generator only carries the formal exponential during reversion. ``[p]`` is
``exp(p * log(t))`` where ``log`` integrates the invariant differential;
over a field of characteristic zero this is the ``p``-fold formal sum.
Public functions hand back plain coefficient lists of :class:`QuadElement`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.ring_series import (
    rs_diff,
    rs_integrate,
    rs_mul,
    rs_series_inversion,
    rs_series_reversion,
    rs_subs,
    rs_trunc,
)
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..exceptions import BadReduction, CurveError, PrecisionTooLow, UnsupportedPrime
from .quadratic_field import LocalPrime, QuadElement, QuadraticField
from .reduction import ReductionType, is_supersingular, reduction_type
from .weierstrass import CurveModel

Series = List[QuadElement]


def default_precision(p: int) -> int:
    return p * p + 2


@lru_cache(maxsize=None)
def series_ring(base: QuadraticField) -> Tuple[PolyRing, PolyElement, PolyElement]:
    """``(R, t, u)`` with ``R = K[t, u]`` and ``K`` the sympy copy of ``base``."""
    if base.is_rational_field:
        domain = QQ
    else:
        domain = QQ.algebraic_field(sympy.sqrt(base.d))
    return ring("t, u", domain)


def _to_domain(R: PolyRing, a: QuadElement):
    K = R.domain
    x = QQ(a.x.numerator, a.x.denominator)
    if K == QQ:
        return x
    return K([QQ(a.y.numerator, a.y.denominator), x])


def _from_domain(base: QuadraticField, c) -> QuadElement:
    if base.is_rational_field:
        return base(Fraction(int(c.numerator), int(c.denominator)))
    coeffs = [Fraction(int(q.numerator), int(q.denominator)) for q in c.to_list()]
    coeffs = [Fraction(0)] * (2 - len(coeffs)) + coeffs
    return base(coeffs[1], coeffs[0])


def _coefficients(base: QuadraticField, s: PolyElement, n: int) -> Series:
    out = [base(0)] * (n + 1)
    for (i, j), c in s.items():
        if j:
            raise CurveError(f"series still involves the reversion variable: {s}")
        if i <= n:
            out[i] = _from_domain(base, c)
    return out


def _shift_down(s: PolyElement, k: int) -> PolyElement:
    """``s / t^k`` for ``s`` divisible by ``t^k``."""
    R = s.ring
    return R({(i - k, j): c for (i, j), c in s.items()})


def _w_series(E: CurveModel, n: int) -> PolyElement:
    R, t, _ = series_ring(E.base)
    a1, a2, a3, a4, a6 = (_to_domain(R, a) for a in E.a_invariants)
    prec = n + 1
    t2 = t**2
    w = R(0)
    for _ in range(n):
        w2 = rs_mul(w, w, t, prec)
        w3 = rs_mul(w2, w, t, prec)
        new = rs_trunc(
            t**3
            + rs_mul(t * a1 + t2 * a2, w, t, prec)
            + w2 * a3
            + rs_mul(t * a4, w2, t, prec)
            + w3 * a6,
            t,
            prec,
        )
        if new == w:
            break
        w = new
    return w


def formal_w(E: CurveModel, n: int) -> Series:
    """``w(z) = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3`` to ``O(z^(n+1))``."""
    return _coefficients(E.base, _w_series(E, n), n)


def _omega_series(E: CurveModel, n: int) -> PolyElement:
    R, t, _ = series_ring(E.base)
    a1, _, a3, _, _ = (_to_domain(R, a) for a in E.a_invariants)
    prec = n + 1
    w = _w_series(E, n + 3)
    numer = _shift_down(w - t * rs_diff(w, t), 3)
    unit = _shift_down(w, 3)
    denom = rs_trunc(R(-2) + t * a1 + w * a3, t, prec)
    return rs_mul(numer, rs_series_inversion(rs_mul(unit, denom, t, prec), t, prec), t, prec)


def invariant_differential(E: CurveModel, n: int) -> Series:
    """``omega(z) / dz`` to ``O(z^(n+1))``.

    With ``x = z / w`` and ``y = -1 / w``, ``omega = dx / (2y + a1 x + a3)``
    equals ``(w - z w') / (w (-2 + a1 z + a3 w))``.
    """
    return _coefficients(E.base, _omega_series(E, n), n)


def _log_series(E: CurveModel, n: int) -> PolyElement:
    _, t, _ = series_ring(E.base)
    return rs_integrate(_omega_series(E, n - 1), t)


def formal_log(E: CurveModel, n: int) -> Series:
    return _coefficients(E.base, _log_series(E, n), n)


def formal_mult_p(E: CurveModel, p: int, n: Optional[int] = None) -> Series:
    """``[p](t)`` to ``O(t^(n+1))``; ``n`` defaults to ``p^2 + 2``."""
    n = default_precision(p) if n is None else n
    if n < p * p:
        raise PrecisionTooLow(f"precision {n} is below p^2 = {p * p}")
    _, t, u = series_ring(E.base)
    log = _log_series(E, n)
    exp = rs_series_reversion(log, t, n + 1, u)
    result = _coefficients(E.base, rs_subs(exp, {u: log * p}, t, n + 1), n)
    if result[1] != p:
        raise CurveError(f"[p](t) has linear coefficient {result[1]!r}, expected {p}")
    logging.debug("[%d](t) computed to precision %d for %s", p, n, E)
    return result


@dataclass
class NewtonPolygon:
    points: List[Tuple[int, int]]
    hull: List[Tuple[int, int]] = field(default_factory=list)

    @classmethod
    def from_valuations(cls, points: Sequence[Tuple[int, int]]) -> "NewtonPolygon":
        pts = sorted(points)
        hull: List[Tuple[int, int]] = []
        for pt in pts:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
                hull.pop()
            hull.append(pt)
        return cls(list(pts), hull)

    def slopes(self) -> List[Fraction]:
        return [
            Fraction(b[1] - a[1], b[0] - a[0]) for a, b in zip(self.hull, self.hull[1:])
        ]

    def is_convex(self) -> bool:
        s = self.slopes()
        return all(x < y for x, y in zip(s, s[1:]))

    def is_single_segment(self, start: Tuple[int, int], end: Tuple[int, int]) -> bool:
        return self.hull == [start, end]

    def strictly_below(self, point: Tuple[int, int], start: Tuple[int, int], end: Tuple[int, int]) -> bool:
        """Whether ``point`` lies strictly under the segment ``start``-``end``."""
        return _cross(start, end, point) < 0

    def to_dict(self) -> dict:
        return {"points": [list(p) for p in self.points], "hull": [list(p) for p in self.hull]}


def _cross(o: Tuple[int, int], a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(series: Series, v: LocalPrime, max_index: Optional[int] = None) -> NewtonPolygon:
    top = len(series) - 1 if max_index is None else min(max_index, len(series) - 1)
    points = []
    for i in range(1, top + 1):
        val = v.valuation(series[i])
        if val is not None:
            points.append((i, val))
    return NewtonPolygon.from_valuations(points)


class InertiaType(str, Enum):
    LEVEL2 = "Level2"
    LEVEL1_PAIR = "Level1Pair"


@dataclass
class TameInertiaResult:
    kind: InertiaType
    polygon: NewtonPolygon
    e: int
    p: int

    def to_dict(self) -> dict:
        return {"type": self.kind.value, "e": self.e, "p": self.p, **self.polygon.to_dict()}


def tame_inertia(
    E: CurveModel,
    v: LocalPrime,
    p: int = 3,
    precision: Optional[int] = None,
    allow_general: bool = False,
) -> TameInertiaResult:
    """Read the tame inertia action on ``E[p]`` off the Newton polygon of ``[p]``.

    The action is by the level 2 fundamental character exactly when the
    polygon on ``1 <= i <= p^2`` is the single segment ``(1, e)``-``(p^2, 0)``.
    """
    if p != 3 and not allow_general:
        raise UnsupportedPrime(f"the Newton polygon criterion is stated for p = 3, got {p}")
    if v.q != p:
        raise UnsupportedPrime(f"{v} does not lie above {p}")
    if reduction_type(E, v) is not ReductionType.GOOD:
        raise BadReduction(f"{E} does not have good reduction at {v}")
    if not is_supersingular(E, v):
        raise BadReduction(f"{E} has ordinary reduction at {v}")
    series = formal_mult_p(E, p, precision)
    polygon = newton_polygon(series, v, max_index=p * p)
    e = v.e
    level2 = polygon.is_single_segment((1, e), (p * p, 0))
    kind = InertiaType.LEVEL2 if level2 else InertiaType.LEVEL1_PAIR
    logging.info("tame inertia at %s: %s, hull %s", v, kind.value, polygon.hull)
    return TameInertiaResult(kind, polygon, e, p)


def tame_inertia_type(E: CurveModel, v: LocalPrime, p: int = 3, **kwargs) -> InertiaType:
    return tame_inertia(E, v, p, **kwargs).kind


__all__ = [
    "InertiaType",
    "NewtonPolygon",
    "TameInertiaResult",
    "default_precision",
    "formal_log",
    "formal_mult_p",
    "formal_w",
    "invariant_differential",
    "newton_polygon",
    "series_ring",
    "tame_inertia",
    "tame_inertia_type",
]
