"""Finite fields GF(p^r) with elements encoded as base-p integers.

An element ``a`` with ``0 <= a < p**r`` stands for the residue polynomial
whose coefficient of ``x**i`` is the ``i``-th base-``p`` digit of ``a``.
Prime-field elements are therefore the integers ``0 .. p-1`` in every field
of characteristic ``p``, which makes coefficients from GF(p) usable as-is.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

import sympy
from sympy import Poly, symbols

from ..exceptions import AlgebraError, EmbeddingError, FieldMismatchError, ReducibleModulusError

_x = symbols("x")

# Residue fields of curves reach well past the prime range used by the
# Dieudonne-module layers, so the field itself only bounds the order.
MAX_FIELD_ORDER = 10**6

# Largest characteristic accepted by the Witt, covector and Honda layers.
MAX_ALGEBRA_PRIME = 17


def _digits(n: int, p: int, length: int) -> List[int]:
    out = []
    for _ in range(length):
        n, d = divmod(n, p)
        out.append(d)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c % p
    return value


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """``coeffs`` lists coefficients from the constant term upwards."""
    poly = Poly(list(reversed(list(coeffs))), _x, modulus=p)
    if poly.degree() < 1:
        return False
    return bool(poly.is_irreducible)


def smallest_irreducible(p: int, r: int) -> Tuple[int, ...]:
    """Return the first monic irreducible of degree ``r`` over GF(p).

    Candidates ``x^r + c_{r-1} x^{r-1} + ... + c_0`` are ordered by the
    integer ``c_0 + c_1 p + ... + c_{r-1} p^{r-1}``.
    """
    for n in range(p**r):
        coeffs = tuple(_digits(n, p, r)) + (1,)
        if is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise ReducibleModulusError(f"no irreducible polynomial of degree {r} over GF({p})")


class FiniteField:
    """GF(p^r) = GF(p)[x]/(modulus)."""

    def __init__(self, p: int, r: int = 1, modulus: Sequence[int] | None = None) -> None:
        if p < 3 or not sympy.isprime(p):
            raise AlgebraError(f"p must be an odd prime, got {p}")
        if r < 1:
            raise AlgebraError(f"extension degree must be >= 1, got {r}")
        if p**r > MAX_FIELD_ORDER:
            raise AlgebraError(f"GF({p}^{r}) exceeds the supported order {MAX_FIELD_ORDER}")
        self.p = p
        self.r = r
        self.order = p**r
        if modulus is None:
            self.modulus: Tuple[int, ...] = smallest_irreducible(p, r)
        else:
            coeffs = tuple(c % p for c in modulus)
            if len(coeffs) != r + 1 or coeffs[-1] != 1:
                raise ReducibleModulusError(f"modulus must be monic of degree {r}")
            if not is_irreducible_mod_p(coeffs, p):
                raise ReducibleModulusError(f"{coeffs} is reducible over GF({p})")
            self.modulus = coeffs
        logging.debug("constructed GF(%d^%d) with modulus %s", p, r, self.modulus)

    # -- identity -----------------------------------------------------------
    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, r={self.r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.order)

    def coeffs(self, a: int) -> List[int]:
        return _digits(a, self.p, self.r)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        """Reduce an arbitrary coefficient list modulo the field modulus."""
        coeffs = [c % self.p for c in coeffs]
        return _undigits(self._reduce(coeffs), self.p)

    @property
    def gen(self) -> int:
        """The class of ``x``."""
        return self.from_coeffs([0, 1])

    def _reduce(self, coeffs: List[int]) -> List[int]:
        p, r, m = self.p, self.r, self.modulus
        coeffs = list(coeffs)
        for deg in range(len(coeffs) - 1, r - 1, -1):
            lead = coeffs[deg] % p
            if lead:
                for i in range(r + 1):
                    coeffs[deg - r + i] = (coeffs[deg - r + i] - lead * m[i]) % p
        return (coeffs + [0] * r)[:r]

    # -- arithmetic -------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        return _undigits([(x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))], p)

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        return _undigits([(-x) % self.p for x in self.coeffs(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scalar(self, c: int, a: int) -> int:
        """Multiply ``a`` by the prime-field integer ``c``."""
        if self.r == 1:
            return (c * a) % self.p
        return _undigits([(c * x) % self.p for x in self.coeffs(a)], self.p)

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        log = self._log
        return self._exp[(log[a] + log[b]) % (self.order - 1)]

    def pow(self, a: int, n: int) -> int:
        if self.r == 1:
            if n < 0:
                a, n = self.inv(a), -n
            return pow(a, n, self.p)
        if a == 0:
            if n <= 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self._exp[(self._log[a] * n) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _mul_poly(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return _undigits(self._reduce(prod), self.p)

    @cached_property
    def primitive_element(self) -> int:
        q1 = self.order - 1
        factors = list(sympy.factorint(q1))
        for g in range(2, self.order):
            if all(self._pow_poly(g, q1 // f) != 1 for f in factors):
                return g
        raise ReducibleModulusError("no primitive element found")  # pragma: no cover

    def _pow_poly(self, a: int, n: int) -> int:
        result, base = 1, a
        while n:
            if n & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            n >>= 1
        return result

    @cached_property
    def _tables(self) -> Tuple[List[int], Dict[int, int]]:
        g = self.primitive_element
        exp = [1] * (self.order - 1)
        for i in range(1, self.order - 1):
            exp[i] = self._mul_poly(exp[i - 1], g)
        log = {v: i for i, v in enumerate(exp)}
        logging.debug("built exp/log tables for GF(%d^%d)", self.p, self.r)
        return exp, log

    @property
    def _exp(self) -> List[int]:
        return self._tables[0]

    @property
    def _log(self) -> Dict[int, int]:
        return self._tables[1]

    # -- Frobenius and friends -----------------------------------------------------
    def frob(self, a: int, k: int = 1) -> int:
        """``sigma^k(a) = a^(p^k)``; negative ``k`` gives the inverse."""
        k %= self.r
        if k == 0 or self.r == 1:
            return a
        return self.pow(a, self.p**k)

    def frob_inv(self, a: int, k: int = 1) -> int:
        return self.frob(a, -k)

    def char_power(self, a: int, n: int) -> int:
        """``a^(p^n)`` for any integer ``n`` (negative means ``p^-|n|`` root)."""
        return self.frob(a, n)

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def quadratic_character(self, a: int) -> int:
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    def frobenius_order(self) -> int:
        """Smallest ``n >= 1`` with ``sigma^n = id``, found by search."""
        g = self.gen if self.r > 1 else 1
        for n in range(1, self.r + 1):
            if self.frob(g, n) == g:
                return n
        return self.r  # pragma: no cover

    # -- subfields -------------------------------------------------------------
    def embedding_from(self, sub: "FiniteField") -> Dict[int, int]:
        """Return the table of a field embedding ``sub -> self``.

        The image of ``sub.gen`` is the smallest root of ``sub.modulus`` in
        ``self``.
        """
        if sub.p != self.p:
            raise FieldMismatchError(f"characteristics differ: {sub.p} != {self.p}")
        if self.r % sub.r:
            raise EmbeddingError(f"GF({sub.p}^{sub.r}) does not embed in GF({self.p}^{self.r})")
        return _embedding_table(sub, self)

    def check_embedding(self, sub: "FiniteField") -> bool:
        """The embedding is a ring map commuting with Frobenius."""
        table = self.embedding_from(sub)
        for a in sub.elements():
            if table[sub.frob(a)] != self.frob(table[a]):
                return False
            for b in sub.elements():
                if table[sub.add(a, b)] != self.add(table[a], table[b]):
                    return False
                if table[sub.mul(a, b)] != self.mul(table[a], table[b]):
                    return False
        return True


@lru_cache(maxsize=None)
def _embedding_table(sub: FiniteField, big: FiniteField) -> Dict[int, int]:
    def evaluate(coeffs: Sequence[int], y: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = big.add(big.mul(acc, y), c)
        return acc

    root = next((y for y in big.elements() if evaluate(sub.modulus, y) == 0), None)
    if root is None:  # pragma: no cover - excluded by the divisibility test
        raise EmbeddingError("sub-field modulus has no root")
    return {a: evaluate(sub.coeffs(a), root) for a in sub.elements()}


@lru_cache(maxsize=None)
def GF(p: int, r: int = 1) -> FiniteField:
    """Cached default field of order ``p**r``."""
    return FiniteField(p, r)


@dataclass(frozen=True)
class FieldElement:
    """Operator-friendly wrapper around an encoded field element."""

    field: FiniteField
    value: int

    def _check(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        return other % self.field.p

    def __add__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.value, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.value, self._check(other)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.value, self._check(other)))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, n))

    def frobenius(self, k: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frob(self.value, k))

    def is_zero(self) -> bool:
        return self.value == 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.field.coeffs(self.value))

    def __repr__(self) -> str:
        terms = [
            f"{c}" if i == 0 else (f"{c}*x^{i}" if c != 1 else f"x^{i}")
            for i, c in enumerate(self.field.coeffs(self.value))
            if c
        ]
        return " + ".join(reversed(terms)) or "0"


__all__ = [
    "FiniteField",
    "FieldElement",
    "GF",
    "MAX_ALGEBRA_PRIME",
    "smallest_irreducible",
    "is_irreducible_mod_p",
]
