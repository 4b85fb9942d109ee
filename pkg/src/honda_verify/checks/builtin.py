"""Built-in checks, one per acceptance criterion plus the supplementary ones."""

from __future__ import annotations

import itertools
import logging
from typing import Dict

from ..algebra.finite_field import GF
from ..algebra.witt import WittVector, verify_ghost_identity, verify_truncation_congruence
from ..curves.formal import InertiaType, formal_mult_p, tame_inertia
from ..curves.quadratic_field import LocalPrime, QuadraticField
from ..curves.reduction import ReductionType, count_points, is_supersingular, reduce_at, reduction_type
from ..curves.sylow2 import sylow2_check
from ..curves.torsion import x015_report
from ..curves.weierstrass import CurveModel
from ..ext_deform.extensions import verify_ext1
from ..ext_deform.freeness import enumerate_extensions
from ..ext_deform.ramified import build_M_Aprime, verify_basis_claim
from ..numberfields.biquadratic import BiquadraticField, class_number_one_check
from ..numberfields.quadratic import quad_class_number
from ..raynaud.dieudonne import verify_hom_condition
from ..raynaud.honda import honda_system, verify_honda
from ..raynaud.scheme import RaynaudScheme
from ..reports import Provenance, VerificationReport
from ..run_config import RunConfig
from .registry import register_check

# Cremona data ingested as declared external facts, never computed here
CREMONA_ASSUMPTIONS: Dict[int, Dict[str, str]] = {
    2: {"rank.X015.Q": "0", "rank.960G3.Q": "0", "label.twist.d2": "960G3"},
    17: {"rank.X015.Q": "0", "rank.4335D3.Q": "0", "label.twist.d17": "4335D3"},
}
CREMONA_SOURCE = "Cremona's elliptic curve tables"

MAPRIME_CASES = ((3, 2), (5, 2), (5, 4), (7, 2))
EXT1_CASES = ((1, 1, 2), (2, 1, 4), (1, 2, 2))


def witt_identity_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="witt-identity",
        claim="W_n(S_0..S_n) = W_n(Y) + W_n(Z) for p in {3, 5} and n <= 3",
        inputs={"primes": [3, 5], "max_depth": 3},
    )
    for p, n in itertools.product((3, 5), range(4)):
        report.add_check(f"ghost.p{p}.n{n}", verify_ghost_identity(p, n), True, Provenance.REFERENCE)

    # W_2(F_3) = Z/27, with the sum polynomials agreeing with integer addition
    F3 = GF(3)
    vectors = [WittVector.from_integer(F3, v, 2) for v in range(27)]
    report.add_check(
        "integer_bijection",
        [w.to_integer() for w in vectors],
        list(range(27)),
        Provenance.DERIVED,
    )
    agree = all(
        x.add_via_polynomials(y).to_integer() == (x.to_integer() + y.to_integer()) % 27
        for x, y in itertools.product(vectors, repeat=2)
    )
    report.add_check("polynomial_sum_matches_Z27", agree, True, Provenance.DERIVED)
    return report


def truncation_congruence_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="truncation-congruence",
        claim="S_n agrees with the truncated covector polynomial modulo p and deep p-th powers",
        inputs={"primes": [3, 5], "n": [1, 2, 3]},
    )
    for p, n in itertools.product((3, 5), (1, 2, 3)):
        report.add_check(f"congruence.p{p}.n{n}", verify_truncation_congruence(p, n), True, Provenance.REFERENCE)
    return report


def hom_condition_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="hom-condition",
        claim="every e_i is primitive for p in {3, 5, 7}, r in {1, 2} and all delta",
        inputs={"primes": [3, 5, 7], "ranks": [1, 2]},
    )
    for p, r in itertools.product((3, 5, 7), (1, 2)):
        for labels in itertools.product(("1", "p"), repeat=r):
            G = RaynaudScheme(p, r, labels)
            report.merge(verify_hom_condition(G, cfg.depth_for(r)), f"p{p}.delta{''.join(labels)}")
    return report


def honda_omega2_check(cfg: RunConfig) -> VerificationReport:
    G = RaynaudScheme(3, 2, (3, 1))
    report = verify_honda(G, cfg.depth_for(2))
    report.check_id = "honda-omega2"
    return report


def ext1_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="ext1",
        claim="brute-force Ext^1 dimensions match [k:F_p] + 1 (odd) and [k:F_p] + 2 (even)",
        inputs={"cases": [list(c) for c in EXT1_CASES], "enumeration_limit": cfg.enumeration_limit},
    )
    for k_deg, f_deg, expected in EXT1_CASES:
        sub = verify_ext1(GF(3, k_deg), GF(3, f_deg), cfg.enumeration_limit)
        report.merge(sub, f"k{k_deg}.F{f_deg}")
        report.add_check(
            f"k{k_deg}.F{f_deg}.stated_dimension",
            sub.data["formula"],
            expected,
            Provenance.REFERENCE,
        )
    # extensions of free GF(3)[t]/(t^2)-modules stay free
    free = enumerate_extensions([0, 0, 1], 3, 1, 1)
    report.add_check("freeness.t2.all_free", free.all_free, True, Provenance.DERIVED)
    report.add_check("freeness.t2.local", free.local, True, Provenance.TRIVIAL)
    report.data["freeness"] = {"structures": free.structures, "free": free.free, "local": free.local}
    return report


def maprime_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="maprime",
        claim="dim M_A' = e dim M with the listed generators as a basis",
        inputs={"cases": [list(c) for c in MAPRIME_CASES]},
    )
    for p, e in MAPRIME_CASES:
        G = RaynaudScheme(p, 2, (p, 1))
        system = honda_system(G, cfg.depth_for(2))
        model = build_M_Aprime(system, e)
        report.merge(verify_basis_claim(model, cfg.enumeration_limit), f"p{p}.e{e}")
    return report


def ramified_supersingular_curve() -> CurveModel:
    """``y^2 = x^3 + sqrt(3) x^2 + x + 1`` over ``Q(sqrt(3))``."""
    F = QuadraticField(3)
    return CurveModel.from_coefficients(F, [0, F.sqrt, 0, 1, 1])


def ramified_curve_check(cfg: RunConfig) -> VerificationReport:
    E = ramified_supersingular_curve()
    F = E.base
    v = LocalPrime(F, 3)
    report = VerificationReport(
        check_id="ramified-curve",
        claim="the curve over Q(sqrt(3)) is supersingular at sqrt(3) with inertia acting by two level 1 characters",
        inputs={"curve": str(E), "prime": repr(v)},
    )
    report.add_check("discriminant", E.discriminant, 32 * (3 * F.sqrt - 14), Provenance.REFERENCE)
    report.add_check("reduction", reduction_type(E, v), ReductionType.GOOD, Provenance.REFERENCE)
    reduced = reduce_at(E, v)
    report.add_check("reduced_model", list(reduced.a), [0, 0, 0, 1, 1], Provenance.DERIVED)
    report.add_check("point_count.F3", count_points(E, v), 4, Provenance.DERIVED)
    report.add_check("trace", reduced.trace(), 0, Provenance.REFERENCE)
    report.add_check("supersingular", is_supersingular(E, v), True, Provenance.REFERENCE)

    series = formal_mult_p(E, 3, cfg.precision_for(3))
    report.add_check("mult3.linear", series[1], 3, Provenance.TRIVIAL)
    report.add_check("mult3.t3_valuation", v.valuation(series[3]), 1, Provenance.REFERENCE)
    report.add_check("mult3.t9_unit", v.valuation(series[9]), 0, Provenance.REFERENCE)

    result = tame_inertia(E, v, 3, cfg.precision_for(3))
    poly = result.polygon
    report.add_check("hull_has_vertex_3_1", (3, 1) in poly.hull, True, Provenance.REFERENCE)
    report.add_check(
        "vertex_below_segment", poly.strictly_below((3, 1), (1, 2), (9, 0)), True, Provenance.REFERENCE
    )
    report.add_check("hull_convex", poly.is_convex(), True, Provenance.TRIVIAL)
    report.add_check("inertia_type", result.kind, InertiaType.LEVEL1_PAIR, Provenance.REFERENCE)
    report.data["newton_polygon"] = result.to_dict()
    return report


def j1728_check(cfg: RunConfig) -> VerificationReport:
    E = CurveModel.from_coefficients(QuadraticField(1), [0, 0, 0, 1, 0])
    v = LocalPrime(E.base, 7)
    report = VerificationReport(
        check_id="curve-j1728",
        claim="y^2 = x^3 + x has j = 1728 and supersingular reduction at 7",
        inputs={"curve": str(E)},
    )
    report.add_check("discriminant", E.discriminant, -64, Provenance.DERIVED)
    report.add_check("j", E.j_invariant, 1728, Provenance.REFERENCE)
    report.add_check("supersingular.7", is_supersingular(E, v), True, Provenance.REFERENCE)
    return report


def x015_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="x015",
        claim="X_0(15) has exactly eight points over Q(sqrt(2)) and torsion dividing 8 over Q(sqrt(17))",
        inputs={"d": [2, 17], "search_height": cfg.search_height},
    )
    for d in (2, 17):
        report.merge(
            x015_report(d, CREMONA_ASSUMPTIONS[d], cfg.search_height, CREMONA_SOURCE), f"d{d}"
        )
    return report


def classno_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="classno",
        claim="Q(sqrt(2), sqrt(-3)) and Q(sqrt(17), sqrt(-3)) have class number 1",
        inputs={"search_height": cfg.search_height},
    )
    for a, b in ((2, -3), (17, -3)):
        report.merge(class_number_one_check(BiquadraticField(a, b), cfg.search_height), f"Q({a},{b})")
    report.add_check("control.h(-6)", quad_class_number(-6, cfg.search_height), 2, Provenance.DERIVED)
    report.add_check("h(-3)", quad_class_number(-3, cfg.search_height), 1, Provenance.DERIVED)
    report.add_check("h(2)", quad_class_number(2, cfg.search_height), 1, Provenance.DERIVED)
    report.assume(
        "classno.degree8.imported",
        "h(Q(sqrt(d), zeta_5)) = 1 for d in {2, 17}",
        "not recomputed; degree 8 fields are outside the search",
    )
    return report


def sylow2(cfg: RunConfig) -> VerificationReport:
    return sylow2_check()


def embeddings_check(cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        check_id="field-embeddings",
        claim="subfield embeddings GF(p^s) -> GF(p^r) are ring maps commuting with Frobenius",
        inputs={"pairs": [[3, 1, 2], [3, 2, 4], [5, 1, 2]]},
    )
    for p, s, r in ((3, 1, 2), (3, 2, 4), (5, 1, 2)):
        report.add_check(f"GF({p}^{s})->GF({p}^{r})", GF(p, r).check_embedding(GF(p, s)), True, Provenance.DERIVED)
    return report


_BUILTIN = (
    ("witt-identity", witt_identity_check, "acceptance", "Witt sum polynomials satisfy the ghost identity"),
    ("truncation-congruence", truncation_congruence_check, "acceptance", "S_n matches the truncated covector sum"),
    ("hom-condition", hom_condition_check, "acceptance", "Dieudonne covectors are primitive"),
    ("honda-omega2", honda_omega2_check, "acceptance", "the Honda system of Omega_2"),
    ("ext1", ext1_check, "acceptance", "dimension of Ext^1(M, M)"),
    ("maprime", maprime_check, "acceptance", "length and basis of M_A'"),
    ("ramified-curve", ramified_curve_check, "acceptance", "Newton polygon of [3] on a ramified supersingular curve"),
    ("x015", x015_check, "acceptance", "points of X_0(15) over Q(sqrt(2)) and Q(sqrt(17))"),
    ("classno", classno_check, "acceptance", "class number one of Q(sqrt(d), sqrt(-3))"),
    ("sylow2", sylow2, "acceptance", "2-Sylow subgroup of GL_2(F_3)"),
    ("curve-j1728", j1728_check, "supplement", "j = 1728 supersingular at 7"),
    ("field-embeddings", embeddings_check, "supplement", "Frobenius compatible subfield embeddings"),
)

for _order, (_id, _fn, _group, _claim) in enumerate(_BUILTIN):
    register_check(_id, _fn, claim=_claim, group=_group, order=_order)

logging.debug("registered %d built-in checks", len(_BUILTIN))
