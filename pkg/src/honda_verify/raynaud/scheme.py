"""Raynaud schemes of type (p, ..., p) and their special-fibre Hopf algebras.

Indices of the generators ``X_1 .. X_r`` run through ``Z/rZ`` and the
presentation is ``X_i^p = delta_i X_{i+1}`` with ``delta_i`` in ``{1, p}``.
Internally index ``j`` stands for ``X_{j+1}``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Callable, Dict, List, Sequence, Tuple

import sympy

from ..algebra.finite_field import GF, MAX_ALGEBRA_PRIME, FiniteField
from ..algebra.witt import teichmuller_integer
from ..covectors.nilpotent_algebra import AlgebraElement, Monomial, NilpotentAlgebra
from ..exceptions import InvalidPairing, InvalidSchemeError


def parse_delta(values: Sequence[object], p: int) -> Tuple[int, ...]:
    """Accept ``"p"``/``"1"`` labels or the integers ``1``/``p``."""
    out = []
    for v in values:
        text = str(v).strip().lower()
        if text == "p" or text == str(p):
            out.append(p)
        elif text == "1":
            out.append(1)
        else:
            raise InvalidSchemeError(f"delta entries must be 1 or p, got {v!r}")
    return tuple(out)


@dataclass(frozen=True)
class Pairing:
    """One correction term of the comultiplication of ``X_i``."""

    left: Monomial
    right: Monomial
    h: int
    coefficient: int


class RaynaudScheme:
    def __init__(
        self,
        p: int,
        r: int,
        delta: Sequence[object],
        k_degree: int = 1,
    ) -> None:
        if p < 3 or not sympy.isprime(p) or p > MAX_ALGEBRA_PRIME:
            raise InvalidSchemeError(f"p must be an odd prime <= {MAX_ALGEBRA_PRIME}, got {p}")
        if r < 1:
            raise InvalidSchemeError("r must be at least 1")
        delta_t = parse_delta(delta, p)
        if len(delta_t) != r:
            raise InvalidSchemeError(f"expected {r} delta entries, got {len(delta_t)}")
        self.p = p
        self.r = r
        self.delta = delta_t
        self.k_degree = k_degree
        self.field: FiniteField = GF(p, k_degree)
        self.omega = factorial(p)
        mod = p * p
        # gamma_j = omega / delta_j, known mod p^2
        self.gamma_mod_p2: Tuple[int, ...] = tuple((self.omega // d) % mod for d in delta_t)
        self.gamma_bar: Tuple[int, ...] = tuple(g % p for g in self.gamma_mod_p2)
        self.lam: Tuple[int, ...] = tuple(teichmuller_integer(g, p, 1) for g in self.gamma_bar)
        self.lam_bar: Tuple[int, ...] = tuple(l % p for l in self.lam)
        self.delta_bar: Tuple[int, ...] = tuple(0 if d == p else 1 for d in delta_t)
        self._delta_cache: Dict[Monomial, AlgebraElement] = {}
        logging.debug("Raynaud scheme p=%d r=%d delta=%s", p, r, self.delta_labels)

    def __repr__(self) -> str:
        return f"RaynaudScheme(p={self.p}, r={self.r}, delta={self.delta_labels})"

    @property
    def delta_labels(self) -> List[str]:
        return ["p" if d == self.p else "1" for d in self.delta]

    def index(self, j: int) -> int:
        return j % self.r

    # -- coordinate rings --------------------------------------------------------------
    def _factor(self, prefix: str) -> NilpotentAlgebra:
        succ = [(j + 1) % self.r if self.delta_bar[j] else None for j in range(self.r)]
        return NilpotentAlgebra(self.field, succ, [f"{prefix}{j + 1}" for j in range(self.r)])

    @cached_property
    def algebra(self) -> NilpotentAlgebra:
        """``A_k = k[X_1..X_r] / (X_i^p - delta_i X_{i+1})``."""
        return self._factor("X")

    @cached_property
    def tensor_square(self) -> NilpotentAlgebra:
        return self._factor("Y").tensor(self._factor("Z"))

    @cached_property
    def tensor_cube(self) -> NilpotentAlgebra:
        return self._factor("U").tensor(self._factor("V")).tensor(self._factor("W"))

    def left(self, a: AlgebraElement) -> AlgebraElement:
        """``a (x) 1``."""
        return self.tensor_square.embed(a, 0)

    def right(self, a: AlgebraElement) -> AlgebraElement:
        """``1 (x) a``."""
        return self.tensor_square.embed(a, self.r)

    # -- comultiplication ----------------------------------------------------------
    def _digits(self, n: int) -> Monomial:
        out = []
        for _ in range(self.r):
            n, d = divmod(n, self.p)
            out.append(d)
        return tuple(out)

    def _find_h(self, i: int, a1: Monomial, a2: Monomial) -> int:
        p, r = self.p, self.r
        matches = []
        for h in range(1, r + 1):
            wanted = [0] * r
            for k in range(1, h):
                wanted[self.index(i - k)] = p - 1
            wanted[self.index(i - h)] = p
            if all(a1[j] + a2[j] == wanted[j] for j in range(r)):
                matches.append(h)
        if len(matches) != 1:
            raise InvalidPairing(
                f"pair {a1}, {a2} for X_{i + 1} admits {len(matches)} values of h"
            )
        return matches[0]

    @cached_property
    def pairings(self) -> Tuple[Tuple[Pairing, ...], ...]:
        """Correction terms of ``Delta(X_i)`` for every ``i``.

        Pairs of nontrivial characters with product ``chi_i`` correspond to
        exponents ``n', n'' in [1, q-1]`` with ``n' + n''`` equal to ``p^i`` or
        ``p^i + q - 1``.
        """
        p, r = self.p, self.r
        q = p**r
        all_terms = []
        for i in range(r):
            terms = []
            for target in (p**i, p**i + q - 1):
                for n1 in range(1, q):
                    n2 = target - n1
                    if not 1 <= n2 <= q - 1:
                        continue
                    a1, a2 = self._digits(n1), self._digits(n2)
                    h = self._find_h(i, a1, a2)
                    numerator = 1
                    for k in range(1, h + 1):
                        numerator = numerator * self.gamma_bar[self.index(i - k)] % p
                    if numerator == 0:
                        continue
                    denominator = 1
                    for e in a1 + a2:
                        denominator = denominator * factorial(e) % p
                    coeff = numerator * pow(denominator, -1, p) % p
                    terms.append(Pairing(a1, a2, h, coeff))
            logging.debug("Delta(X_%d): %d correction terms", i + 1, len(terms))
            all_terms.append(tuple(terms))
        return tuple(all_terms)

    def comultiply_generator(self, i: int) -> AlgebraElement:
        i = self.index(i)
        T = self.tensor_square
        x = self.algebra.var(i)
        total = self.left(x) + self.right(x)
        for term in self.pairings[i]:
            total = total + T.monomial(term.left + term.right, term.coefficient)
        return total

    @cached_property
    def _generator_images(self) -> Tuple[AlgebraElement, ...]:
        return tuple(self.comultiply_generator(i) for i in range(self.r))

    def comultiply_monomial(self, monom: Monomial) -> AlgebraElement:
        cached = self._delta_cache.get(monom)
        if cached is not None:
            return cached
        result = self.tensor_square.one()
        for j, e in enumerate(monom):
            if e:
                result = result * self._generator_images[j] ** e
        self._delta_cache[monom] = result
        return result

    def comultiply(self, a: AlgebraElement) -> AlgebraElement:
        """``Delta`` extended k-linearly and multiplicatively."""
        total = self.tensor_square.zero()
        for monom, c in a.terms.items():
            total = total + self.comultiply_monomial(monom).scale(c)
        return total

    # -- Hopf algebra laws -------------------------------------------------------
    def counit_defect(self, i: int) -> Tuple[AlgebraElement, AlgebraElement]:
        """``(eps (x) 1) Delta(X_i) - X_i`` and ``(1 (x) eps) Delta(X_i) - X_i``."""
        A = self.algebra
        r = self.r
        delta = self.comultiply_generator(i)
        left_kill = A.zero()
        right_kill = A.zero()
        for monom, c in delta.terms.items():
            if not any(monom[:r]):
                left_kill = left_kill + A.monomial(monom[r:], c)
            if not any(monom[r:]):
                right_kill = right_kill + A.monomial(monom[:r], c)
        x = A.var(self.index(i))
        return left_kill - x, right_kill - x

    def relation_defect(self, i: int) -> AlgebraElement:
        """``Delta(X_i)^p - delta_i Delta(X_{i+1})``."""
        i = self.index(i)
        lhs = self._generator_images[i].frobenius_power()
        rhs = self._generator_images[self.index(i + 1)].scale(self.delta_bar[i])
        return lhs - rhs

    def coassociativity_defect(self, i: int) -> AlgebraElement:
        """``(Delta (x) 1) Delta(X_i) - (1 (x) Delta) Delta(X_i)`` in ``A^(x)3``."""
        T3 = self.tensor_cube
        A = self.algebra
        r = self.r
        lhs = T3.zero()
        rhs = T3.zero()
        for monom, c in self.comultiply_generator(i).terms.items():
            m1, m2 = monom[:r], monom[r:]
            left_first = T3.embed(self.comultiply_monomial(m1), 0) * T3.embed(A.monomial(m2), 2 * r)
            right_first = T3.embed(A.monomial(m1), 0) * T3.embed(self.comultiply_monomial(m2), r)
            lhs = lhs + left_first.scale(c)
            rhs = rhs + right_first.scale(c)
        return lhs - rhs



def coordinate_ring(G: RaynaudScheme) -> Tuple[NilpotentAlgebra, Callable[[AlgebraElement], AlgebraElement]]:
    """``A_k`` together with ``Delta: A_k -> A_k (x) A_k``.

    The correction terms are enumerated here, so an inconsistent exponent
    system raises :class:`InvalidPairing` before any element is comultiplied.
    """
    _ = G.pairings
    return G.algebra, G.comultiply


__all__ = ["RaynaudScheme", "Pairing", "coordinate_ring", "parse_delta"]
