"""The 2-Sylow subgroup of ``GL_2(F_3)`` generated by ``c`` and ``tau``."""

from __future__ import annotations

from typing import FrozenSet, Iterable, Tuple

from ..reports import Provenance, VerificationReport

Mat = Tuple[int, int, int, int]  # (a, b, c, d) for [[a, b], [c, d]]

MODULUS = 3
TAU: Mat = (1, 1, -1 % MODULUS, 1)
C: Mat = (1, 0, 0, -1 % MODULUS)
IDENTITY: Mat = (1, 0, 0, 1)


def mat_mul(x: Mat, y: Mat, m: int = MODULUS) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % m, (a * f + b * h) % m, (c * e + d * g) % m, (c * f + d * h) % m)


def mat_pow(x: Mat, n: int) -> Mat:
    out = IDENTITY
    for _ in range(n):
        out = mat_mul(out, x)
    return out


def det(x: Mat, m: int = MODULUS) -> int:
    return (x[0] * x[3] - x[1] * x[2]) % m


def order(x: Mat) -> int:
    n, current = 1, x
    while current != IDENTITY:
        current = mat_mul(current, x)
        n += 1
    return n


def generated_group(gens: Iterable[Mat]) -> FrozenSet[Mat]:
    gens = list(gens)
    group = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        g = frontier.pop()
        for h in gens:
            new = mat_mul(g, h)
            if new not in group:
                group.add(new)
                frontier.append(new)
    return frozenset(group)


def sylow2_check() -> VerificationReport:
    report = VerificationReport(
        check_id="sylow2",
        claim="c and tau generate a group of order 16 whose subgroup <tau^2, c tau> is non-abelian in SL_2(F_3)",
        inputs={"tau": list(TAU), "c": list(C), "modulus": MODULUS},
    )
    tau2 = mat_pow(TAU, 2)
    c_tau = mat_mul(C, TAU)
    report.add_check("order_tau", order(TAU), 8, Provenance.REFERENCE)
    report.add_check("order_c", order(C), 2, Provenance.REFERENCE)
    report.add_check("c_tau_equals_tau3_c", c_tau == mat_mul(mat_pow(TAU, 3), C), True, Provenance.REFERENCE)
    report.add_check("group_order", len(generated_group([C, TAU])), 16, Provenance.REFERENCE)
    report.add_check("det_tau2", det(tau2), 1, Provenance.DERIVED)
    report.add_check("det_c_tau", det(c_tau), 1, Provenance.DERIVED)
    report.add_check(
        "non_abelian", mat_mul(c_tau, tau2) != mat_mul(tau2, c_tau), True, Provenance.REFERENCE
    )
    sub = generated_group([tau2, c_tau])
    report.add_check("subgroup_order", len(sub), 8, Provenance.DERIVED)
    report.add_check("subgroup_in_SL2", all(det(g) == 1 for g in sub), True, Provenance.DERIVED)
    involutions = sum(1 for g in sub if order(g) == 2)
    report.add_check(
        "subgroup_is_quaternion", involutions, 1, Provenance.DERIVED,
        detail="a group of order 8 with a single involution is quaternion",
    )
    return report


__all__ = ["C", "TAU", "det", "generated_group", "mat_mul", "order", "sylow2_check"]
