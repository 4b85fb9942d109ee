"""Dieudonne module of the special fibre, realized by covectors over ``A_k``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from ..algebra.finite_field import FiniteField
from ..algebra.linear import mat_mul_mod_p, rank_mod_p
from ..covectors.covector import (
    Covector,
    Tail,
    covector_add,
    frobenius_cw,
    scalar_action,
    sum_entry_with_window,
    verschiebung_cw,
)
from ..reports import Provenance, VerificationReport
from .scheme import RaynaudScheme


def default_window(G: RaynaudScheme, depth: Optional[int] = None) -> int:
    return depth if depth else 2 * G.r + 2


def gamma_product(G: RaynaudScheme, i: int, n: int) -> int:
    """``gamma_{i-1} ... gamma_{i-n}`` mod p (0-based ``i``)."""
    value = 1
    for k in range(1, n + 1):
        value = value * G.gamma_bar[G.index(i - k)] % G.p
    return value


def dieudonne_covector(G: RaynaudScheme, i: int) -> Covector:
    """The covector ``e_i`` whose depth-``n`` entry is ``gamma_{i-1}..gamma_{i-n} X_{i-n}``.

    The gamma values lie in GF(p), so the ``sigma^-n`` twists act trivially.
    When no gamma vanishes the entries repeat with period ``r`` and twist
    ``prod gamma = (-1)^r``.
    """
    A = G.algebra
    i = G.index(i)
    r, p = G.r, G.p
    if all(G.gamma_bar):
        entries = [A.var(G.index(i - n)).scale(gamma_product(G, i, n)) for n in range(2 * r)]
        twist = gamma_product(G, i, r)
        return Covector(A, entries, Tail("periodic", r, twist, 0))
    entries = []
    for n in range(r + 1):
        g = gamma_product(G, i, n)
        if g == 0:
            break
        entries.append(A.var(G.index(i - n)).scale(g))
    logging.debug("e_%d stored to depth %d (p=%d)", i + 1, len(entries) - 1, p)
    return Covector(A, entries)


def dieudonne_covectors(G: RaynaudScheme) -> List[Covector]:
    return [dieudonne_covector(G, i) for i in range(G.r)]


def comultiply_covector(G: RaynaudScheme, a: Covector) -> Covector:
    """Apply ``Delta`` entry by entry, giving a covector over ``A_k (x) A_k``."""
    return a.map_entries(G.comultiply, G.tensor_square)


def primitive_sum(G: RaynaudScheme, a: Covector, depth: int) -> Covector:
    """``a (x) 1 + 1 (x) a`` in the covector group of ``A_k (x) A_k``."""
    T2 = G.tensor_square
    return covector_add(a.map_entries(G.left, T2), a.map_entries(G.right, T2), depth)


def verify_hom_condition(G: RaynaudScheme, depth: Optional[int] = None) -> VerificationReport:
    """Check ``Delta(e_i) = e_i (x) 1 + 1 (x) e_i`` on the window ``[0, depth]``."""
    window = default_window(G, depth)
    report = VerificationReport(
        check_id="hom-condition",
        claim="Delta(e_i) = e_i (x) 1 + 1 (x) e_i for every i",
        inputs={"p": G.p, "r": G.r, "delta": G.delta_labels, "window": window},
    )
    for i, e in enumerate(dieudonne_covectors(G)):
        lhs = comultiply_covector(G, e)
        rhs = primitive_sum(G, e, window)
        mismatches = [n for n in range(window + 1) if lhs.entry(n) != rhs.entry(n)]
        report.add_check(f"hom_condition.e{i + 1}", mismatches, [], Provenance.REFERENCE)
    return report


def verify_generator_identity(G: RaynaudScheme, depth: Optional[int] = None) -> VerificationReport:
    """``Delta(X_i)`` is the depth-0 sum entry of ``e_i (x) 1`` and ``1 (x) e_i``
    for every window width past the deepest correction term; also
    ``F(e_i) = (..., 0, X_i^p)``.

    Correction terms reach depth ``r - 1`` unless every gamma is a unit, in
    which case the full-cycle term sits at depth ``r``.
    """
    window = default_window(G, depth)
    T2 = G.tensor_square
    A = G.algebra
    report = VerificationReport(
        check_id="generator-identity",
        claim="Delta(X_i) = S~_-n(e_i (x) 1; 1 (x) e_i) for large n, and F(e_i) = (...,0,X_i^p)",
        inputs={"p": G.p, "r": G.r, "delta": G.delta_labels, "window": window},
    )
    first = G.r if all(G.gamma_bar) else G.r - 1
    report.data["first_width"] = first
    for i, e in enumerate(dieudonne_covectors(G)):
        left = e.map_entries(G.left, T2)
        right = e.map_entries(G.right, T2)
        target = G.comultiply_generator(i)
        failing = [
            n
            for n in range(first, window + 1)
            if sum_entry_with_window(left, right, 0, n) != target
        ]
        report.add_check(f"generator_identity.X{i + 1}", failing, [], Provenance.REFERENCE)
        expected = Covector.singleton(A.var(i).frobenius_power())
        report.add_check(
            f"frobenius_singleton.e{i + 1}",
            frobenius_cw(e).agrees_with(expected, window),
            True,
            Provenance.REFERENCE,
        )
    return report


def verify_bialgebra_laws(G: RaynaudScheme, coassociativity: bool = True) -> VerificationReport:
    """Relations, counit and (optionally) coassociativity of ``Delta`` on generators."""
    report = VerificationReport(
        check_id="bialgebra-laws",
        claim="Delta respects X_i^p = delta_i X_{i+1}, the counit and coassociativity",
        inputs={"p": G.p, "r": G.r, "delta": G.delta_labels},
    )
    for i in range(G.r):
        report.add_check(f"relation.X{i + 1}", G.relation_defect(i).is_zero(), True)
        left, right = G.counit_defect(i)
        report.add_check(f"counit.X{i + 1}", left.is_zero() and right.is_zero(), True)
        if coassociativity:
            report.add_check(
                f"coassociativity.X{i + 1}", G.coassociativity_defect(i).is_zero(), True
            )
    return report


@dataclass
class DieudonneModule:
    """``M`` with basis ``e_1 .. e_r``; column ``i`` of a matrix is the image of ``e_i``."""

    scheme: RaynaudScheme
    F_matrix: List[List[int]]
    V_matrix: List[List[int]]
    covectors: List[Covector]

    @property
    def field(self) -> FiniteField:
        return self.scheme.field

    @property
    def rank(self) -> int:
        return self.scheme.r

    def apply_F(self, vector: Sequence[int]) -> List[int]:
        """``F(sum a_i e_i) = sum sigma(a_i) F(e_i)``."""
        k = self.field
        return self._apply(self.F_matrix, [k.frob(a) for a in vector])

    def apply_V(self, vector: Sequence[int]) -> List[int]:
        """``V(sum a_i e_i) = sum sigma^-1(a_i) V(e_i)``."""
        k = self.field
        return self._apply(self.V_matrix, [k.frob_inv(a) for a in vector])

    def _apply(self, matrix: List[List[int]], vector: Sequence[int]) -> List[int]:
        k = self.field
        out = []
        for row in matrix:
            acc = 0
            for c, a in zip(row, vector):
                acc = k.add(acc, k.mul(c % k.p, a))
            out.append(acc)
        return out

    def realize(self, vector: Sequence[int], depth: Optional[int] = None) -> Covector:
        """``sum [a_i] e_i`` in ``CW(A_k)``."""
        window = default_window(self.scheme, depth)
        total = Covector.zero(self.scheme.algebra)
        for a, e in zip(vector, self.covectors):
            if a:
                total = covector_add(total, scalar_action(a, e), window)
        return total

    def image_label(self, column: Sequence[int]) -> str:
        parts = []
        p = self.field.p
        for j, c in enumerate(column):
            c %= p
            if not c:
                continue
            coeff = "" if c == 1 else ("-" if c == p - 1 else f"{c}*")
            parts.append(f"{coeff}e{j + 1}")
        return " + ".join(parts) if parts else "0"

    def describe(self) -> Dict[str, str]:
        out = {}
        for i in range(self.rank):
            out[f"F(e{i + 1})"] = self.image_label([row[i] for row in self.F_matrix])
            out[f"V(e{i + 1})"] = self.image_label([row[i] for row in self.V_matrix])
        return out


def dieudonne_module(G: RaynaudScheme) -> DieudonneModule:
    """``F(e_i) = delta_i e_{i+1}`` and ``V(e_i) = lambda_{i-1} e_{i-1}`` mod p."""
    r, p = G.r, G.p
    F = [[0] * r for _ in range(r)]
    V = [[0] * r for _ in range(r)]
    for i in range(r):
        F[G.index(i + 1)][i] = (F[G.index(i + 1)][i] + G.delta_bar[i]) % p
        V[G.index(i - 1)][i] = (V[G.index(i - 1)][i] + G.lam_bar[G.index(i - 1)]) % p
    return DieudonneModule(G, F, V, dieudonne_covectors(G))


def _coefficient_rows(M: DieudonneModule, window: int) -> List[List[int]]:
    monomials = list(M.scheme.algebra.basis())
    rows = []
    for e in M.covectors:
        row: List[int] = []
        for n in range(window + 1):
            row.extend(e.entry(n).coefficient_vector(monomials))
        rows.append(row)
    return rows


def verify_module(M: DieudonneModule, depth: Optional[int] = None) -> VerificationReport:
    """FV = VF = 0, the realized F and V against the matrices, and independence."""
    G = M.scheme
    window = default_window(G, depth)
    p, r = G.p, G.r
    zero = [[0] * r for _ in range(r)]
    report = VerificationReport(
        check_id="dieudonne-module",
        claim="F(e_i) = delta_i e_{i+1}, V(e_i) = lambda_{i-1} e_{i-1}, FV = VF = 0",
        inputs={"p": p, "r": r, "delta": G.delta_labels, "window": window},
    )
    report.add_check("FV", mat_mul_mod_p(M.F_matrix, M.V_matrix, p), zero, Provenance.TRIVIAL)
    report.add_check("VF", mat_mul_mod_p(M.V_matrix, M.F_matrix, p), zero, Provenance.TRIVIAL)
    for i, e in enumerate(M.covectors):
        f_col = [row[i] for row in M.F_matrix]
        v_col = [row[i] for row in M.V_matrix]
        report.add_check(
            f"realized_F.e{i + 1}",
            frobenius_cw(e).agrees_with(M.realize(f_col, window), window),
            True,
        )
        report.add_check(
            f"realized_V.e{i + 1}",
            verschiebung_cw(e).agrees_with(M.realize(v_col, window), window),
            True,
        )
    report.add_check(
        "independence.rank", rank_mod_p(_coefficient_rows(M, window), p), r, Provenance.REFERENCE
    )
    return report


__all__ = [
    "DieudonneModule",
    "dieudonne_covector",
    "dieudonne_covectors",
    "dieudonne_module",
    "comultiply_covector",
    "primitive_sum",
    "verify_hom_condition",
    "verify_generator_identity",
    "verify_bialgebra_laws",
    "verify_module",
    "gamma_product",
    "default_window",
]
