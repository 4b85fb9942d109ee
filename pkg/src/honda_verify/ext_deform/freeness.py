"""Extensions of free modules over ``R = GF(p)[t]/(g)`` are free."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence

import sympy

from ..algebra.linear import mat_mul_mod_p, rank_mod_p
from ..exceptions import EnumerationBoundExceeded, ExtDeformError

Matrix = List[List[int]]

FREENESS_ENUMERATION_LIMIT = 10**5


def companion_matrix(g: Sequence[int], p: int) -> Matrix:
    """Multiplication by ``t`` on ``1, t, .., t^(d-1)``; ``g`` is monic, low degree first."""
    d = len(g) - 1
    if d < 1 or g[-1] % p != 1:
        raise ExtDeformError("g must be monic of degree >= 1")
    T = [[0] * d for _ in range(d)]
    for j in range(d - 1):
        T[j + 1][j] = 1
    for i in range(d):
        T[i][d - 1] = (-g[i]) % p
    return T


def _block_diagonal(block: Matrix, copies: int) -> Matrix:
    d = len(block)
    out = [[0] * (d * copies) for _ in range(d * copies)]
    for c in range(copies):
        for i in range(d):
            for j in range(d):
                out[c * d + i][c * d + j] = block[i][j]
    return out


def _evaluate(g: Sequence[int], T: Matrix, p: int) -> Matrix:
    """``g(T)`` by Horner's rule."""
    n = len(T)
    result = [[0] * n for _ in range(n)]
    for c in reversed(g):
        result = mat_mul_mod_p(result, T, p)
        for i in range(n):
            result[i][i] = (result[i][i] + c) % p
    return result


def is_local(g: Sequence[int], p: int) -> bool:
    """Whether ``GF(p)[t]/(g)`` is local, i.e. ``g`` is a power of one irreducible."""
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(list(g))), t, modulus=p)
    return len(poly.factor_list()[1]) == 1


@dataclass
class FreenessResult:
    structures: int
    free: int
    rank: int
    local: bool

    @property
    def all_free(self) -> bool:
        return self.structures == self.free


def enumerate_extensions(
    g: Sequence[int], p: int, m: int, n: int, limit: int = FREENESS_ENUMERATION_LIMIT
) -> FreenessResult:
    """Run through all ``t``-actions ``[[T_m, C], [0, T_n]]`` on ``R^m (+) R^n``
    that are ``R``-module structures and test whether ``n + m`` lifted
    generators span the middle term."""
    T_R = companion_matrix(g, p)
    d = len(T_R)
    rows, cols = d * m, d * n
    if p ** (rows * cols) > limit:
        raise EnumerationBoundExceeded(
            f"{p ** (rows * cols)} gluing matrices exceed the bound {limit}"
        )
    size = d * (m + n)
    gens = [d * b for b in range(m + n)]
    structures = free = 0
    for flat in itertools.product(range(p), repeat=rows * cols):
        T = _block_diagonal(T_R, m + n)
        for i in range(rows):
            for j in range(cols):
                T[i][rows + j] = flat[i * cols + j]
        if any(any(row) for row in _evaluate(g, T, p)):
            continue
        structures += 1
        vectors = []
        power = [[int(i == j) for j in range(size)] for i in range(size)]
        for _ in range(d):
            vectors.extend([power[i][c] for i in range(size)] for c in gens)
            power = mat_mul_mod_p(T, power, p)
        if rank_mod_p(vectors, p) == size:
            free += 1
    local = is_local(g, p)
    logging.debug(
        "freeness: %d module structures, %d free (local ring: %s)", structures, free, local
    )
    return FreenessResult(structures, free, m + n, local)


def freeness_witness(g: Sequence[int], p: int, m: int, n: int, limit: int = FREENESS_ENUMERATION_LIMIT) -> bool:
    """Every extension of ``R^n`` by ``R^m`` is isomorphic to ``R^(n+m)``."""
    return enumerate_extensions(g, p, m, n, limit).all_free


__all__ = [
    "FreenessResult",
    "companion_matrix",
    "enumerate_extensions",
    "freeness_witness",
    "is_local",
]
