"""Witt covectors ``(..., a_-n, ..., a_-1, a_0)`` over finite monomial algebras.

``Covector.entries[n]`` holds ``a_-n``. Deep entries are either zero past
the stored depth or repeat with a declared period:

    a_-(n+P) = c * sigma^-P(a_-n)    for n >= start,

where ``c`` lies in GF(p)^x and ``sigma`` acts on coefficients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence

from ..algebra.witt import inverse_factorial_pair
from ..exceptions import CovectorError, IncompatibleTailError, NilpotenceViolation
from .nilpotent_algebra import AlgebraElement, NilpotentAlgebra


@dataclass(frozen=True)
class Tail:
    kind: str = "zero"
    period: int = 0
    twist: int = 1
    start: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("zero", "periodic"):
            raise CovectorError(f"unknown tail kind {self.kind!r}")
        if self.kind == "periodic" and self.period < 1:
            raise CovectorError("periodic tails need a positive period")

    @property
    def periodic(self) -> bool:
        return self.kind == "periodic"

    def rule(self) -> tuple:
        return (self.period, self.twist)


ZERO_TAIL = Tail()


class Covector:
    """A covector stored to a finite depth plus a tail descriptor."""

    __slots__ = ("algebra", "entries", "tail")

    def __init__(
        self,
        algebra: NilpotentAlgebra,
        entries: Sequence[AlgebraElement],
        tail: Tail = ZERO_TAIL,
    ) -> None:
        entries = list(entries) or [algebra.zero()]
        for e in entries:
            if e.algebra != algebra:
                raise CovectorError("covector entries must lie in one algebra")
        if tail.periodic:
            p = algebra.p
            if not 0 < tail.twist % p:
                raise CovectorError("the tail twist must be a unit of GF(p)")
            if len(entries) < tail.start + tail.period:
                raise CovectorError("a periodic covector must store one full period")
            for n in range(tail.start, len(entries) - tail.period):
                expected = entries[n].sigma(-tail.period).scale(tail.twist % p)
                if entries[n + tail.period] != expected:
                    raise CovectorError(
                        f"entry at depth {n + tail.period} breaks the declared period"
                    )
        else:
            while len(entries) > 1 and entries[-1].is_zero():
                entries.pop()
        self.algebra = algebra
        self.entries: tuple = tuple(entries)
        self.tail = tail

    # -- constructors ---------------------------------------------------------------
    @classmethod
    def zero(cls, algebra: NilpotentAlgebra) -> "Covector":
        return cls(algebra, [algebra.zero()])

    @classmethod
    def singleton(cls, element: AlgebraElement, depth: int = 0) -> "Covector":
        algebra = element.algebra
        return cls(algebra, [algebra.zero()] * depth + [element])

    # -- access -------------------------------------------------------------------------
    @property
    def depth(self) -> int:
        return len(self.entries) - 1

    def entry(self, n: int) -> AlgebraElement:
        """``a_-n`` for any ``n >= 0``."""
        if n < 0:
            raise CovectorError("depth must be non-negative")
        if n <= self.depth:
            return self.entries[n]
        if not self.tail.periodic:
            return self.algebra.zero()
        P = self.tail.period
        m = -(-(n - self.depth) // P)
        base = self.entries[n - m * P]
        twist = pow(self.tail.twist, m, self.algebra.p)
        return base.sigma(-P * m).scale(twist)

    def window(self, depth: int) -> List[AlgebraElement]:
        return [self.entry(n) for n in range(depth + 1)]

    def agrees_with(self, other: "Covector", depth: int) -> bool:
        return all(self.entry(n) == other.entry(n) for n in range(depth + 1))

    def is_zero(self) -> bool:
        return not self.tail.periodic and all(e.is_zero() for e in self.entries)

    def __iter__(self) -> Iterator[AlgebraElement]:
        return iter(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Covector):
            return NotImplemented
        if self.tail.periodic or other.tail.periodic:
            if self.tail != other.tail:
                return False
            span = max(self.depth, other.depth) + self.tail.period
            return self.agrees_with(other, span)
        return self.algebra == other.algebra and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.entries, self.tail))

    def __repr__(self) -> str:
        shown = ", ".join(repr(e) for e in reversed(self.entries))
        lead = "..." if self.tail.periodic else "..., 0"
        return f"({lead}, {shown})"

    def map_entries(
        self, func: Callable[[AlgebraElement], AlgebraElement], algebra: NilpotentAlgebra
    ) -> "Covector":
        """Apply a GF(p)-defined algebra map entry by entry; the tail is kept."""
        return Covector(algebra, [func(e) for e in self.entries], self.tail)

    def __add__(self, other: "Covector") -> "Covector":
        return covector_add(self, other)


# -- the group law ---------------------------------------------------------------------


def _binomial_tail(p: int, y: AlgebraElement, z: AlgebraElement) -> AlgebraElement:
    """``sum_{i=1}^{p-1} y^i z^(p-i) / (i! (p-i)!)``."""
    algebra = y.algebra
    if y.is_zero() or z.is_zero():
        return algebra.zero()
    ypow = [algebra.one()]
    zpow = [algebra.one()]
    for _ in range(p - 1):
        ypow.append(ypow[-1] * y)
        zpow.append(zpow[-1] * z)
    total = algebra.zero()
    for i in range(1, p):
        total = total + (ypow[i] * zpow[p - i]).scale(inverse_factorial_pair(p, i))
    return total


def truncated_sum_entry(ys: Sequence[AlgebraElement], zs: Sequence[AlgebraElement]) -> AlgebraElement:
    """Evaluate the truncated addition polynomial on ``ys[j] = Y_-j``, ``zs[j] = Z_-j``.

    Structural evaluation: once ``prod (Y_-j + Z_-j)^(p-1)`` vanishes every
    deeper summand vanishes too.
    """
    algebra = ys[0].algebra
    p = algebra.p
    w = len(ys) - 1
    total = ys[0] + zs[0]
    if w >= 1:
        total = total + _binomial_tail(p, ys[1], zs[1])
    prefix = algebra.one()
    for r in range(2, w + 1):
        prefix = prefix * (ys[r - 1] + zs[r - 1])
        prefix_power = prefix ** (p - 1)
        if prefix_power.is_zero():
            break
        term = prefix_power * _binomial_tail(p, ys[r], zs[r])
        # sign (-1)^(r-1)
        total = total - term if r % 2 == 0 else total + term
    return total


def _check_nilpotence(a: Covector, label: str) -> None:
    for n, e in enumerate(a.entries):
        if n >= 2 and not e.frobenius_power().is_zero():
            raise NilpotenceViolation(
                f"{label}: entry at depth {n} has nonzero p-th power; "
                "the truncated sum would not be the limit"
            )


def covector_add(a: Covector, b: Covector, truncation_depth: Optional[int] = None) -> Covector:
    """Sum in ``CW_k(R)``.

    Entry ``n`` of the sum is the truncated polynomial evaluated on the
    window of depths ``n .. n+w``: ``w`` reaches the deepest stored entry for
    zero tails and equals ``truncation_depth`` (default ``2 P + 2``) when a
    tail is periodic.
    """
    if a.algebra != b.algebra:
        raise CovectorError("covectors over different algebras")
    _check_nilpotence(a, "left summand")
    _check_nilpotence(b, "right summand")

    periodic = [c.tail for c in (a, b) if c.tail.periodic]
    if not periodic:
        depth = max(a.depth, b.depth)
        entries = [
            truncated_sum_entry(
                [a.entry(m) for m in range(n, depth + 1)],
                [b.entry(m) for m in range(n, depth + 1)],
            )
            for n in range(depth + 1)
        ]
        return Covector(a.algebra, entries)

    if len(periodic) == 2 and periodic[0].rule() != periodic[1].rule():
        raise IncompatibleTailError(
            f"period/twist {periodic[0].rule()} differs from {periodic[1].rule()}"
        )
    period, twist = periodic[0].rule()
    width = truncation_depth if truncation_depth is not None else 2 * period + 2
    start = max(c.tail.start if c.tail.periodic else c.depth + 1 for c in (a, b))
    stored = start + 2 * period
    logging.debug(
        "periodic covector sum: window %d, tail from depth %d, period %d",
        width,
        start,
        period,
    )
    entries = [
        truncated_sum_entry(
            [a.entry(m) for m in range(n, n + width + 1)],
            [b.entry(m) for m in range(n, n + width + 1)],
        )
        for n in range(stored)
    ]
    return Covector(a.algebra, entries, Tail("periodic", period, twist, start))


def sum_entry_with_window(a: Covector, b: Covector, n: int, width: int) -> AlgebraElement:
    """Entry ``n`` of ``a + b`` computed with an explicit window width."""
    return truncated_sum_entry(
        [a.entry(m) for m in range(n, n + width + 1)],
        [b.entry(m) for m in range(n, n + width + 1)],
    )


def covector_multiple(a: Covector, m: int, truncation_depth: Optional[int] = None) -> Covector:
    """``m * a`` by repeated addition, ``m >= 0``."""
    result = Covector.zero(a.algebra)
    for _ in range(m):
        result = covector_add(result, a, truncation_depth)
    return result


# -- operators ----------------------------------------------------------------------------


def frobenius_cw(a: Covector) -> Covector:
    """``F(..., a_-n, ..., a_0) = (..., a_-n^p, ..., a_0^p)``."""
    return Covector(a.algebra, [e.frobenius_power() for e in a.entries], a.tail)


def verschiebung_cw(a: Covector) -> Covector:
    """``V(..., a_-1, a_0) = (..., a_-2, a_-1)``."""
    if not a.tail.periodic:
        return Covector(a.algebra, list(a.entries[1:]))
    tail = a.tail
    entries = [a.entry(n) for n in range(1, a.depth + 2)]
    return Covector(a.algebra, entries, Tail("periodic", tail.period, tail.twist, max(tail.start - 1, 0)))


def scalar_action(x: int, a: Covector) -> Covector:
    """``[x] a = (..., x^(p^-n) a_-n, ..., x a_0)`` for ``x`` in the base field."""
    F = a.algebra.field
    if x == 0:
        return Covector.zero(a.algebra)
    entries = [e.scale(F.frob(x, -n)) for n, e in enumerate(a.entries)]
    return Covector(a.algebra, entries, a.tail)


__all__ = [
    "Tail",
    "ZERO_TAIL",
    "Covector",
    "covector_add",
    "covector_multiple",
    "sum_entry_with_window",
    "truncated_sum_entry",
    "frobenius_cw",
    "verschiebung_cw",
    "scalar_action",
]
