"""Exact linear algebra over GF(p) on integer row lists."""

from typing import List, Sequence

from sympy.polys.domains import FF
from sympy.polys.matrices.domainmatrix import DomainMatrix


def _matrix(rows: Sequence[Sequence[int]], p: int, ncols: int) -> DomainMatrix:
    domain = FF(p)
    return DomainMatrix(
        [[domain(int(x) % p) for x in row] for row in rows], (len(rows), ncols), domain
    )


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return int(_matrix(rows, p, len(rows[0])).rank())


def in_row_span(vector: Sequence[int], rows: Sequence[Sequence[int]], p: int) -> bool:
    """Whether ``vector`` is a GF(p)-combination of ``rows``."""
    if not any(int(x) % p for x in vector):
        return True
    return rank_mod_p(list(rows) + [list(vector)], p) == rank_mod_p(rows, p)


def nullspace_mod_p(rows: Sequence[Sequence[int]], p: int, ncols: int) -> List[List[int]]:
    """Basis of ``{x : rows . x = 0}`` over GF(p), as integer lists."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    null = _matrix(rows, p, ncols).nullspace()
    return [[int(x) % p for x in row] for row in null.to_Matrix().tolist()]


def mat_mul_mod_p(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> List[List[int]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) % p for j in range(cols)]
        for i in range(len(a))
    ]


__all__ = ["rank_mod_p", "in_row_span", "nullspace_mod_p", "mat_mul_mod_p"]
