"""Extensions of the supersingular Dieudonne module by itself.

An extension of ``M`` by ``M`` is ``M (+) M`` with block upper triangular
``F`` and ``V``; ``FV = VF = 0`` forces ``f_3 = v_3 = 0``, ``f_1 = sigma(v_4)``
and ``f_4 = sigma(v_1)``, so a datum is ``(f_2, v_1, v_2, v_4)``.
Unipotent changes of basis ``[[1, a], [0, 1]]`` translate data by
``(a_1 - sigma a_4, sigma^-1 a_3, -a_1 + sigma^-1 a_4, -a_3)``.
"""

from __future__ import annotations

import logging
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..algebra.finite_field import FiniteField
from ..algebra.tensor_algebra import Element, TensorAlgebra
from ..exceptions import EnumerationBoundExceeded, ExtDeformError, FieldMismatchError
from ..reports import Provenance, VerificationReport

Datum = Tuple[Element, Element, Element, Element]
Matrix = List[List[Element]]

DEFAULT_ENUMERATION_LIMIT = 81
# up to this many data every datum is enumerated and joined with its neighbours
FULL_ENUMERATION_LIMIT = 9**4


def ext1_dimension_formula(k: FiniteField, F: FiniteField) -> int:
    """``[k:F_p] + 1`` for odd degree, ``[k:F_p] + 2`` for even, over ``F``."""
    if k.p != F.p:
        raise FieldMismatchError("k and F must have the same characteristic")
    return k.r + gcd(2, k.r)


# -- semilinear 4x4 matrices -------------------------------------------------------


def _mat_mul(R: TensorAlgebra, a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = R.zero
            for t in range(n):
                if a[i][t] != R.zero and b[t][j] != R.zero:
                    acc = R.add(acc, R.mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(row)
    return out


def _mat_sigma(R: TensorAlgebra, a: Matrix, k: int) -> Matrix:
    return [[R.sigma(x, k) for x in row] for row in a]


def extension_matrices(R: TensorAlgebra, datum: Datum) -> Tuple[Matrix, Matrix]:
    """The 4x4 ``F`` and ``V`` of the extension given by ``datum``."""
    f2, v1, v2, v4 = datum
    z, one = R.zero, R.one
    minus = R.neg(one)
    f1, f4 = R.sigma(v4), R.sigma(v1)
    F = [[z, one, f1, f2], [z, z, z, f4], [z, z, z, one], [z, z, z, z]]
    V = [[z, minus, v1, v2], [z, z, z, v4], [z, z, z, minus], [z, z, z, z]]
    return F, V


def fv_relations_hold(R: TensorAlgebra, F: Matrix, V: Matrix) -> bool:
    """``F o V = F sigma(V)`` and ``V o F = V sigma^-1(F)`` both vanish."""
    zero = [[R.zero] * 4 for _ in range(4)]
    return (
        _mat_mul(R, F, _mat_sigma(R, V, 1)) == zero
        and _mat_mul(R, V, _mat_sigma(R, F, -1)) == zero
    )


def translation(R: TensorAlgebra, a1: Element, a3: Element, a4: Element) -> Datum:
    return (
        R.sub(a1, R.sigma(a4)),
        R.sigma_inv(a3),
        R.add(R.neg(a1), R.sigma_inv(a4)),
        R.neg(a3),
    )


def translation_generators(R: TensorAlgebra) -> List[Datum]:
    z = R.zero
    gens = []
    for b in R.additive_basis():
        gens.append(translation(R, b, z, z))
        gens.append(translation(R, z, b, z))
        gens.append(translation(R, z, z, b))
    return gens


def _add_datum(R: TensorAlgebra, x: Datum, y: Datum) -> Datum:
    return tuple(R.add(a, b) for a, b in zip(x, y))  # type: ignore[return-value]


def _span(R: TensorAlgebra, generators: Iterable[Datum]) -> Set[Datum]:
    zero: Datum = (R.zero,) * 4  # type: ignore[assignment]
    span = {zero}
    for g in generators:
        new = set()
        for s in span:
            acc = s
            for _ in range(R.p - 1):
                acc = _add_datum(R, acc, g)
                new.add(acc)
        span |= new
    return span


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _count_by_union_find(R: TensorAlgebra, gens: Sequence[Datum]) -> Tuple[int, int, bool]:
    elements = list(R.elements())
    index: Dict[Element, int] = {e: i for i, e in enumerate(elements)}
    size = len(elements)

    def encode(d: Datum) -> int:
        code = 0
        for part in d:
            code = code * size + index[part]
        return code

    def decode(code: int) -> Datum:
        parts = []
        for _ in range(4):
            code, i = divmod(code, size)
            parts.append(elements[i])
        return tuple(reversed(parts))  # type: ignore[return-value]

    total = size**4
    uf = _UnionFind(total)
    all_valid = True
    for code in range(total):
        d = decode(code)
        if not fv_relations_hold(R, *extension_matrices(R, d)):
            all_valid = False
        for g in gens:
            uf.union(code, encode(_add_datum(R, d, g)))
    classes = sum(1 for code in range(total) if uf.find(code) == code)
    zero_root = uf.find(encode((R.zero,) * 4))  # type: ignore[arg-type]
    logging.debug("union-find over %d data: %d classes, split root %d", total, classes, zero_root)
    return classes, total, all_valid


def is_split(R: TensorAlgebra, datum: Datum) -> bool:
    """Whether ``datum`` gives the block diagonal ``F (+) F``, ``V (+) V``."""
    F, V = extension_matrices(R, datum)
    return all(F[i][j] == R.zero and V[i][j] == R.zero for i in (0, 1) for j in (2, 3))


def sigma_squared_cokernel(R: TensorAlgebra) -> int:
    """``|R / (sigma^2 - 1) R|``."""
    return R.cokernel_size(lambda a: R.sub(R.sigma(a, 2), a))


def count_extension_classes(
    R: TensorAlgebra, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Dict[str, object]:
    if R.order > limit:
        raise EnumerationBoundExceeded(
            f"|k (x) F| = {R.order} exceeds the enumeration bound {limit}"
        )
    gens = translation_generators(R)
    if R.order**4 <= FULL_ENUMERATION_LIMIT:
        classes, total, valid = _count_by_union_find(R, gens)
        method = "union-find"
    else:
        orbit = _span(R, gens)
        valid = all(fv_relations_hold(R, *extension_matrices(R, d)) for d in orbit)
        total = R.order**4
        classes = total // len(orbit)
        method = "coset-count"
    logging.info("extension classes over |R|=%d: %d (%s)", R.order, classes, method)
    return {"classes": classes, "data": total, "relations_hold": valid, "method": method}


def _log_exact(n: int, base: int) -> Optional[int]:
    d = 0
    while n > 1 and n % base == 0:
        n //= base
        d += 1
    return d if n == 1 else None


def ext1_dimension_bruteforce(
    k: FiniteField, F: FiniteField, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> int:
    """``log_|F|`` of the number of extension classes found by enumeration."""
    R = TensorAlgebra(k, F)
    classes = int(count_extension_classes(R, limit)["classes"])  # type: ignore[call-overload]
    dim = _log_exact(classes, F.order)
    if dim is None:
        raise ExtDeformError(
            f"{classes} classes is not a power of |F| = {F.order}"
        )
    return dim


def verify_ext1(
    k: FiniteField, F: FiniteField, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> VerificationReport:
    R = TensorAlgebra(k, F)
    report = VerificationReport(
        check_id="ext1",
        claim="dim_F Ext^1(M, M) is [k:F_p] + 1 for odd degree and [k:F_p] + 2 for even",
        inputs={"p": k.p, "k_degree": k.r, "F_degree": F.r},
    )
    formula = ext1_dimension_formula(k, F)
    counted = count_extension_classes(R, limit)
    classes = int(counted["classes"])  # type: ignore[call-overload]
    report.add_check("relations_hold", counted["relations_hold"], True, Provenance.TRIVIAL)
    report.add_check(
        "classes_vs_cokernel",
        classes,
        R.order * sigma_squared_cokernel(R),
        Provenance.DERIVED,
        detail="classes = |k (x) F| * |coker(sigma^2 - 1)|",
    )
    report.add_check(
        "split_class_is_zero", is_split(R, (R.zero,) * 4), True, Provenance.TRIVIAL  # type: ignore[arg-type]
    )
    report.add_check(
        "dimension",
        _log_exact(classes, F.order),
        formula,
        Provenance.REFERENCE,
    )
    report.data.update({"classes": classes, "method": counted["method"], "formula": formula})
    return report


__all__ = [
    "ext1_dimension_formula",
    "ext1_dimension_bruteforce",
    "count_extension_classes",
    "extension_matrices",
    "fv_relations_hold",
    "sigma_squared_cokernel",
    "translation",
    "translation_generators",
    "verify_ext1",
    "DEFAULT_ENUMERATION_LIMIT",
]
