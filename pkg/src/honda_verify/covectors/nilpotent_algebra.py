"""Finite monomial algebras ``k[v_1..v_m] / (v_j^p - s_j)``.

Each generator either satisfies ``v_j^p = 0`` or ``v_j^p = v_succ(j)``; this
covers the special fibres of Raynaud schemes and their tensor powers.
Elements are sparse maps from exponent tuples (all entries ``< p``) to
nonzero field elements.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..algebra.finite_field import FiniteField
from ..exceptions import AlgebraError

Monomial = Tuple[int, ...]


class NilpotentAlgebra:
    def __init__(
        self,
        field: FiniteField,
        successors: Sequence[Optional[int]],
        names: Sequence[str] | None = None,
        blocks: Sequence[int] | None = None,
    ) -> None:
        self.field = field
        self.p = field.p
        self.successors: Tuple[Optional[int], ...] = tuple(successors)
        self.nvars = len(self.successors)
        for s in self.successors:
            if s is not None and not 0 <= s < self.nvars:
                raise AlgebraError(f"successor index {s} out of range")
        self.names = tuple(names) if names else tuple(f"v{j}" for j in range(self.nvars))
        # Block sizes record how a tensor power was assembled.
        self.blocks: Tuple[int, ...] = tuple(blocks) if blocks else (self.nvars,)

    def __repr__(self) -> str:
        return f"NilpotentAlgebra({self.field!r}, vars={self.names})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NilpotentAlgebra)
            and self.field == other.field
            and self.successors == other.successors
            and self.names == other.names
        )

    def __hash__(self) -> int:
        return hash((self.field, self.successors, self.names))

    @property
    def dimension(self) -> int:
        return self.p**self.nvars

    def is_nilpotent(self) -> bool:
        """The generators generate a nilpotent ideal iff no successor chain cycles."""
        for start in range(self.nvars):
            seen = set()
            j: Optional[int] = start
            while j is not None:
                if j in seen:
                    return False
                seen.add(j)
                j = self.successors[j]
        return True

    def basis(self) -> Iterator[Monomial]:
        return itertools.product(range(self.p), repeat=self.nvars)

    # -- construction ------------------------------------------------------------
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(0,) * self.nvars: 1})

    def scalar(self, c: int) -> "AlgebraElement":
        return AlgebraElement(self, {(0,) * self.nvars: c} if c else {})

    def var(self, j: int) -> "AlgebraElement":
        exps = [0] * self.nvars
        exps[j] = 1
        return self.monomial(exps)

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "AlgebraElement":
        normal = self.normalize(exps)
        if normal is None or coeff == 0:
            return self.zero()
        return AlgebraElement(self, {normal: coeff})

    def normalize(self, exps: Sequence[int]) -> Optional[Monomial]:
        """Rewrite ``v_j^p`` until every exponent is below ``p``; ``None`` is zero."""
        e = list(exps)
        p = self.p
        changed = True
        while changed:
            changed = False
            for j in range(self.nvars):
                if e[j] >= p:
                    carry, e[j] = divmod(e[j], p)
                    succ = self.successors[j]
                    if succ is None:
                        return None
                    e[succ] += carry
                    changed = True
        return tuple(e)

    # -- tensor powers -------------------------------------------------------------
    def tensor(self, other: "NilpotentAlgebra") -> "NilpotentAlgebra":
        if other.field != self.field:
            raise AlgebraError("tensor factors must share the base field")
        shift = self.nvars
        succ = list(self.successors) + [
            None if s is None else s + shift for s in other.successors
        ]
        names = list(self.names) + list(other.names)
        algebra = NilpotentAlgebra(self.field, succ, names, self.blocks + other.blocks)
        logging.debug("tensor algebra with %d generators", algebra.nvars)
        return algebra

    def tensor_power(self, n: int, names: Sequence[Sequence[str]] | None = None) -> "NilpotentAlgebra":
        factors = []
        for i in range(n):
            label = names[i] if names else [f"{nm}_{i}" for nm in self.names]
            factors.append(NilpotentAlgebra(self.field, self.successors, label))
        result = factors[0]
        for f in factors[1:]:
            result = result.tensor(f)
        return result

    def embed(self, element: "AlgebraElement", offset: int) -> "AlgebraElement":
        """Place ``element`` of a factor algebra at generator ``offset`` of ``self``."""
        n = element.algebra.nvars
        if offset + n > self.nvars:
            raise AlgebraError("factor does not fit at this offset")
        terms = {}
        for monom, c in element.terms.items():
            full = [0] * self.nvars
            full[offset : offset + n] = monom
            terms[tuple(full)] = c
        return AlgebraElement(self, terms)


class AlgebraElement:
    """Immutable element of a :class:`NilpotentAlgebra`."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: NilpotentAlgebra, terms: Mapping[Monomial, int]) -> None:
        self.algebra = algebra
        self.terms: Dict[Monomial, int] = {m: c for m, c in terms.items() if c}

    # -- comparisons -------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == self.algebra.scalar(other % self.algebra.p)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------------
    def _combine(self, other: "AlgebraElement", sign: int) -> "AlgebraElement":
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraError("elements of different algebras")
        F = self.algebra.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            c = c if sign > 0 else F.neg(c)
            out[m] = F.add(out.get(m, 0), c)
        return AlgebraElement(self.algebra, out)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self._combine(other, 1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self._combine(other, -1)

    def __neg__(self) -> "AlgebraElement":
        F = self.algebra.field
        return AlgebraElement(self.algebra, {m: F.neg(c) for m, c in self.terms.items()})

    def scale(self, c: int) -> "AlgebraElement":
        """Multiply by the field element ``c`` (an encoded element of the base field)."""
        F = self.algebra.field
        if c == 0:
            return self.algebra.zero()
        return AlgebraElement(self.algebra, {m: F.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other: "AlgebraElement | int") -> "AlgebraElement":
        if isinstance(other, int):
            return self.scale(other % self.algebra.p)
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraError("elements of different algebras")
        A = self.algebra
        F = A.field
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = A.normalize([a + b for a, b in zip(m1, m2)])
                if m is None:
                    continue
                out[m] = F.add(out.get(m, 0), F.mul(c1, c2))
        return AlgebraElement(A, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise AlgebraError("negative powers are not defined")
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius_power(self) -> "AlgebraElement":
        """``x^p = sum sigma(c) m^p``; exact in characteristic ``p``."""
        A = self.algebra
        F = A.field
        out: Dict[Monomial, int] = {}
        for m, c in self.terms.items():
            mp = A.normalize([e * A.p for e in m])
            if mp is not None:
                out[mp] = F.add(out.get(mp, 0), F.frob(c))
        return AlgebraElement(A, out)

    def sigma(self, k: int = 1) -> "AlgebraElement":
        """Apply ``sigma^k`` to the coefficients only."""
        F = self.algebra.field
        return AlgebraElement(self.algebra, {m: F.frob(c, k) for m, c in self.terms.items()})

    def coefficient_vector(self, monomials: Sequence[Monomial]) -> List[int]:
        return [self.terms.get(m, 0) for m in monomials]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.algebra.names
        parts = []
        for m in sorted(self.terms):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e
            )
            c = self.terms[m]
            parts.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(parts)


def sum_elements(elements: Iterable[AlgebraElement], algebra: NilpotentAlgebra) -> AlgebraElement:
    total = algebra.zero()
    for e in elements:
        total = total + e
    return total


__all__ = ["NilpotentAlgebra", "AlgebraElement", "Monomial", "sum_elements"]
