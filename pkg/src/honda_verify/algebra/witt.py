"""Witt vector addition polynomials, their truncated covector form, and
finite-length Witt vectors over finite fields."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import List, Sequence, Tuple

from sympy import ZZ, GF as SymGF
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..exceptions import WittArithmeticError
from .finite_field import FiniteField


def inverse_factorial_pair(p: int, i: int) -> int:
    """``1 / (i! (p-i)!)`` modulo ``p``."""
    return pow(factorial(i) * factorial(p - i), -1, p)


@lru_cache(maxsize=None)
def witt_ring(n: int) -> Tuple[PolyRing, Tuple[PolyElement, ...], Tuple[PolyElement, ...]]:
    names = [f"Y{i}" for i in range(n + 1)] + [f"Z{i}" for i in range(n + 1)]
    R, *gens = ring(",".join(names), ZZ)
    return R, tuple(gens[: n + 1]), tuple(gens[n + 1 :])


def ghost_polynomial(p: int, xs: Sequence[PolyElement]) -> PolyElement:
    """``W_n(X_0..X_n) = X_0^(p^n) + p X_1^(p^(n-1)) + ... + p^n X_n``."""
    n = len(xs) - 1
    return sum((p**i * xs[i] ** (p ** (n - i)) for i in range(n + 1)), xs[0].ring.zero)


@lru_cache(maxsize=None)
def witt_sum_polynomials(p: int, n: int) -> Tuple[PolyElement, ...]:
    """Return ``S_0 .. S_n`` in ``ZZ[Y_0..Y_n, Z_0..Z_n]``.

    Built recursively from
    ``p^m S_m = W_m(Y) + W_m(Z) - sum_{i<m} p^i S_i^(p^(m-i))``;
    the exact division raises if an ``S_m`` would not be integral.
    """
    if n < 0:
        raise WittArithmeticError("depth must be >= 0")
    R, Y, Z = witt_ring(n)
    sums: List[PolyElement] = []
    for m in range(n + 1):
        rhs = ghost_polynomial(p, Y[: m + 1]) + ghost_polynomial(p, Z[: m + 1])
        for i in range(m):
            rhs -= p**i * sums[i] ** (p ** (m - i))
        sums.append(rhs.exquo(R(p**m)))
        logging.debug("S_%d for p=%d has %d terms", m, p, len(sums[-1]))
    return tuple(sums)


def verify_ghost_identity(p: int, n: int) -> bool:
    """``W_n(S_0..S_n) == W_n(Y) + W_n(Z)`` as polynomials over ZZ."""
    sums = witt_sum_polynomials(p, n)
    R, Y, Z = witt_ring(n)
    return ghost_polynomial(p, sums) == ghost_polynomial(p, Y) + ghost_polynomial(p, Z)


@lru_cache(maxsize=None)
def covector_ring(p: int, n: int) -> Tuple[PolyRing, Tuple[PolyElement, ...], Tuple[PolyElement, ...]]:
    """``GF(p)[Y_-n..Y_0, Z_-n..Z_0]``; index ``j`` of each tuple is depth ``j``."""
    names = [f"Ym{j}" for j in range(n + 1)] + [f"Zm{j}" for j in range(n + 1)]
    R, *gens = ring(",".join(names), SymGF(p))
    return R, tuple(gens[: n + 1]), tuple(gens[n + 1 :])


def _binomial_tail(p: int, y, z):
    """``sum_{i=1}^{p-1} y^i z^(p-i) / (i! (p-i)!)`` in characteristic ``p``."""
    return sum(
        (inverse_factorial_pair(p, i) * y**i * z ** (p - i) for i in range(1, p)),
        y * 0,
    )


@lru_cache(maxsize=None)
def truncated_covector_addition_poly(p: int, n: int) -> PolyElement:
    """The truncated polynomial giving one covector sum entry from ``n+1`` slots.

    ``Y0 + Z0 + B(Y_-1, Z_-1)
    + sum_{r=2}^{n} (-1)^(r-1) ((Y_-1+Z_-1)...(Y_-r+1 + Z_-r+1))^(p-1) B(Y_-r, Z_-r)``.
    """
    if n < 1:
        raise WittArithmeticError("the truncated polynomial needs depth n >= 1")
    R, Y, Z = covector_ring(p, n)
    total = Y[0] + Z[0] + _binomial_tail(p, Y[1], Z[1])
    prefix = R.one
    for r in range(2, n + 1):
        prefix *= Y[r - 1] + Z[r - 1]
        total += (-1) ** (r - 1) * prefix ** (p - 1) * _binomial_tail(p, Y[r], Z[r])
    return total


def reduce_modulo_deep_powers(p: int, n: int, poly: PolyElement) -> PolyElement:
    """Drop monomials divisible by ``Y_-j^p`` or ``Z_-j^p`` for ``j >= 2``."""
    R, _, _ = covector_ring(p, n)
    deep = [j for j in range(2, n + 1)] + [n + 1 + j for j in range(2, n + 1)]
    terms = {
        monom: coeff
        for monom, coeff in poly.terms()
        if all(monom[idx] < p for idx in deep)
    }
    return R.from_dict(terms) if terms else R.zero


def sum_polynomial_in_covector_ring(p: int, n: int) -> PolyElement:
    """``S_n`` reduced mod ``p`` with ``Y_i`` renamed to depth ``n - i``."""
    s_n = witt_sum_polynomials(p, n)[n]
    R, _, _ = covector_ring(p, n)
    terms = {}
    for monom, coeff in s_n.terms():
        c = int(coeff) % p
        if not c:
            continue
        ys, zs = monom[: n + 1], monom[n + 1 :]
        renamed = tuple(reversed(ys)) + tuple(reversed(zs))
        terms[renamed] = c
    return R.from_dict(terms) if terms else R.zero


def verify_truncation_congruence(p: int, n: int) -> bool:
    """``S_n == S~_-n`` modulo ``(p, Y_-2^p .. Y_-n^p, Z_-2^p .. Z_-n^p)``."""
    lhs = reduce_modulo_deep_powers(p, n, sum_polynomial_in_covector_ring(p, n))
    rhs = reduce_modulo_deep_powers(p, n, truncated_covector_addition_poly(p, n))
    return lhs == rhs


@dataclass(frozen=True)
class WittVector:
    """Truncated Witt vector ``(a_0, ..., a_n)`` over a finite field."""

    field: FiniteField
    coords: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coords)

    @property
    def p(self) -> int:
        return self.field.p

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "WittVector":
        return cls(field, (0,) * (n + 1))

    def __add__(self, other: "WittVector") -> "WittVector":
        self._check(other)
        if self.field.r == 1:
            n = self.length - 1
            return WittVector.from_integer(
                self.field, self.to_integer() + other.to_integer(), n
            )
        return self.add_via_polynomials(other)

    def add_via_polynomials(self, other: "WittVector") -> "WittVector":
        """Coordinate-wise sum evaluated through ``S_0 .. S_n``."""
        self._check(other)
        n = self.length - 1
        F = self.field
        point = self.coords + other.coords
        coords = []
        for s in witt_sum_polynomials(self.p, n):
            acc = 0
            for monom, coeff in s.terms():
                c = int(coeff) % self.p
                if not c:
                    continue
                term = c
                for value, exp in zip(point, monom):
                    if exp:
                        term = F.mul(term, F.pow(value, exp))
                        if term == 0:
                            break
                acc = F.add(acc, term)
            coords.append(acc)
        return WittVector(F, tuple(coords))

    def __mul__(self, other: "WittVector") -> "WittVector":
        self._check(other)
        if self.field.r == 1:
            n = self.length - 1
            return WittVector.from_integer(
                self.field, self.to_integer() * other.to_integer(), n
            )
        if self.is_teichmuller():
            return other.teichmuller_scale(self.coords[0])
        if other.is_teichmuller():
            return self.teichmuller_scale(other.coords[0])
        raise WittArithmeticError(
            "general multiplication over non-prime fields is not supported"
        )

    def is_teichmuller(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def teichmuller_scale(self, x: int) -> "WittVector":
        """``[x] * (b_0, b_1, ...) = (x b_0, x^p b_1, x^(p^2) b_2, ...)``."""
        F = self.field
        return WittVector(
            F,
            tuple(F.mul(F.char_power(x, i), b) for i, b in enumerate(self.coords)),
        )

    def valuation(self) -> int | None:
        """Index of the first nonzero coordinate; ``None`` for zero."""
        for i, c in enumerate(self.coords):
            if c:
                return i
        return None

    def ghost_components(self) -> Tuple[int, ...]:
        """Ghost components of the integer lift of the coordinates."""
        lifted = [int(c) for c in self.coords]
        return tuple(
            sum(self.p**i * lifted[i] ** (self.p ** (m - i)) for i in range(m + 1))
            for m in range(self.length)
        )

    def to_integer(self) -> int:
        """Canonical image in ZZ/p^(n+1) for vectors over GF(p)."""
        if self.field.r != 1:
            raise WittArithmeticError("only W_n(GF(p)) is identified with integers")
        p, n = self.p, self.length - 1
        mod = p ** (n + 1)
        return sum(p**i * teichmuller_integer(c, p, n) for i, c in enumerate(self.coords)) % mod

    @classmethod
    def from_integer(cls, field: FiniteField, value: int, n: int) -> "WittVector":
        """Witt coordinates of ``value mod p^(n+1)``.

        Peels off one Teichmuller digit at a time:
        ``value = [a_0] + p [a_1] + ...`` in ZZ/p^(n+1).
        """
        if field.r != 1:
            raise WittArithmeticError("only W_n(GF(p)) is identified with integers")
        p = field.p
        mod = p ** (n + 1)
        rest = value % mod
        coords = []
        for i in range(n + 1):
            digit = rest % p
            coords.append(digit)
            rest = ((rest - teichmuller_integer(digit, p, n)) % mod) // p
        return cls(field, tuple(coords))

    def _check(self, other: "WittVector") -> None:
        if other.field != self.field or other.length != self.length:
            raise WittArithmeticError("Witt vectors of different shapes")


def teichmuller_integer(a: int, p: int, n: int) -> int:
    """The Teichmuller lift of ``a mod p`` in ZZ/p^(n+1): ``a^(p^n)``."""
    mod = p ** (n + 1)
    return pow(a % p, p**n, mod) if a % p else 0


def teichmuller(field: FiniteField, x: int, n: int) -> WittVector:
    """``[x] = (x, 0, ..., 0)`` in ``W_n(field)``."""
    return WittVector(field, (x,) + (0,) * n)


__all__ = [
    "witt_sum_polynomials",
    "verify_ghost_identity",
    "truncated_covector_addition_poly",
    "verify_truncation_congruence",
    "inverse_factorial_pair",
    "WittVector",
    "teichmuller",
    "teichmuller_integer",
]
