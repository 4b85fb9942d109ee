"""Honda systems ``(L, M)`` of Raynaud schemes.

``L`` is computed as the kernel of the ``w``-map
``(a_-n) -> sum p^-n a^_-n^(p^n) mod pA`` evaluated on the realized
covectors ``e_i`` with Teichmuller lifts of the entry coefficients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..exceptions import PrecisionError
from ..reports import Provenance, VerificationReport
from .dieudonne import (
    DieudonneModule,
    default_window,
    dieudonne_module,
    gamma_product,
    verify_bialgebra_laws,
    verify_generator_identity,
    verify_hom_condition,
    verify_module,
)
from .scheme import RaynaudScheme

OMEGA_ASSUMPTION = "omega.equals.p_factorial"
# largest p^r for which coassociativity in A^(x)3 is checked
COASSOCIATIVITY_MAX_ORDER = 125


def _p_valuation(n: int, p: int) -> int:
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


@dataclass
class WTerm:
    """Contribution of depth ``n`` of ``e_i`` to ``w(e_i)``, a multiple of ``X_i``."""

    depth: int
    coefficient: Optional[Fraction]
    valuation: Optional[int]


def w_terms(G: RaynaudScheme, i: int, window: int) -> List[WTerm]:
    """Terms of ``w(e_i)`` through ``window``.

    Depth ``n`` lifts to ``lambda_{i-1}..lambda_{i-n} X_{i-n}``; its
    ``p^n``-th power is ``delta_{i-n}^(p^(n-1)) ... delta_{i-1} X_i``.
    """
    p = G.p
    i = G.index(i)
    out = [WTerm(0, Fraction(1), 0)]
    for n in range(1, window + 1):
        if gamma_product(G, i, n) == 0:
            break
        lam = 1
        chain_valuation = 0
        for k in range(1, n + 1):
            lam = lam * G.lam[G.index(i - k)] % (p * p)
            chain_valuation += _p_valuation(G.delta[G.index(i - k)], p) * p ** (n - k)
        valuation = _p_valuation(lam, p) + chain_valuation - n
        coefficient = None
        if n == 1:
            coefficient = Fraction(pow(lam, p, p * p) * G.delta[G.index(i - 1)], p)
        if n >= 2 and valuation < 1:
            raise PrecisionError(
                f"w(e_{i + 1}) depth {n}: valuation {valuation} is not visibly in pA"
            )
        out.append(WTerm(n, coefficient, valuation))
    return out


def w_coefficient(terms: List[WTerm], p: int) -> int:
    """Coefficient of ``X_i`` in ``w(e_i) mod pA`` (depths ``n >= 2`` vanish)."""
    total = sum((t.coefficient for t in terms if t.coefficient is not None), Fraction(0))
    if total.denominator % p == 0:
        raise PrecisionError(f"w-map value {total} is not p-integral")
    return total.numerator * pow(total.denominator, -1, p) % p


@dataclass
class HondaSystem:
    module: DieudonneModule
    L_basis: List[int]
    w_values: List[int]
    deep_valuations: Dict[str, Dict[int, int]] = field(default_factory=dict)

    @property
    def scheme(self) -> RaynaudScheme:
        return self.module.scheme

    @property
    def L_dimension(self) -> int:
        return len(self.L_basis)

    def FM_basis(self) -> List[int]:
        """Indices ``j`` with ``e_j`` in the image of ``F``."""
        F = self.module.F_matrix
        return [j for j in range(self.module.rank) if any(F[j])]

    def to_dict(self) -> Dict[str, Any]:
        G = self.scheme
        return {
            "p": G.p,
            "r": G.r,
            "delta": G.delta_labels,
            "k_degree": G.k_degree,
            "F_matrix": self.module.F_matrix,
            "V_matrix": self.module.V_matrix,
            "operators": self.module.describe(),
            "L_basis": [f"e{i + 1}" for i in self.L_basis],
            "w": {f"e{i + 1}": w for i, w in enumerate(self.w_values)},
        }


def honda_system(G: RaynaudScheme, depth: Optional[int] = None) -> HondaSystem:
    window = default_window(G, depth)
    module = dieudonne_module(G)
    w_values = []
    deep: Dict[str, Dict[int, int]] = {}
    for i in range(G.r):
        terms = w_terms(G, i, window)
        w_values.append(w_coefficient(terms, G.p))
        deep[f"e{i + 1}"] = {
            t.depth: t.valuation for t in terms if t.depth >= 2 and t.valuation is not None
        }
    L = [i for i, w in enumerate(w_values) if w == 0]
    logging.info("Honda system p=%d delta=%s: L spanned by %s", G.p, G.delta_labels, L)
    return HondaSystem(module, L, w_values, deep)


def _is_omega2_shape(G: RaynaudScheme) -> bool:
    return G.r == 2 and G.delta_labels == ["p", "1"]


def verify_honda(
    G: RaynaudScheme,
    depth: Optional[int] = None,
    coassociativity: Optional[bool] = None,
) -> VerificationReport:
    """Build ``(L, M)`` for ``G`` and run every structural check on it."""
    window = default_window(G, depth)
    if coassociativity is None:
        coassociativity = G.p**G.r <= COASSOCIATIVITY_MAX_ORDER
    report = VerificationReport(
        check_id="honda",
        claim="the Honda system of the Raynaud scheme, with L = span of lambda_{i-1} e_i",
        inputs={"p": G.p, "r": G.r, "delta": G.delta_labels, "k_degree": G.k_degree},
    )
    report.assume(OMEGA_ASSUMPTION, G.omega, "omega is fixed as p!, congruent to it mod p^2")
    report.merge(verify_bialgebra_laws(G, coassociativity=coassociativity), "bialgebra")
    report.merge(verify_hom_condition(G, window), "hom")
    report.merge(verify_generator_identity(G, window), "generator")

    system = honda_system(G, window)
    report.merge(verify_module(system.module, window), "module")

    expected_L = [i for i in range(G.r) if G.lam_bar[G.index(i - 1)]]
    report.add_check("L.span", system.L_basis, expected_L, Provenance.REFERENCE)
    report.add_check(
        "L.dimension_count",
        system.L_dimension + len(system.FM_basis()),
        G.r,
        Provenance.REFERENCE,
    )
    if _is_omega2_shape(G):
        ops = system.module.describe()
        report.add_check(
            "omega2.operators",
            ops,
            {"F(e1)": "0", "F(e2)": "e1", "V(e1)": "0", "V(e2)": "-e1"},
            Provenance.REFERENCE,
        )
        report.add_check("omega2.L", [f"e{i + 1}" for i in system.L_basis], ["e2"], Provenance.REFERENCE)
    report.data["honda_system"] = system.to_dict()
    report.data["deep_w_valuations"] = system.deep_valuations
    report.data["coassociativity_checked"] = coassociativity
    return report


__all__ = [
    "HondaSystem",
    "WTerm",
    "honda_system",
    "verify_honda",
    "w_terms",
    "w_coefficient",
    "OMEGA_ASSUMPTION",
]
