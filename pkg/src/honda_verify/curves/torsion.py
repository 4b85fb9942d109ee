"""Torsion bounds from reductions and the point count of ``X_0(15)`` over ``Q(sqrt(d))``."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd, isqrt
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from ..exceptions import (
    BadReductionPrime,
    CurveError,
    MissingAssumption,
    NoBoundPrimes,
    PrimeNotSplit,
)
from ..reports import Provenance, VerificationReport
from .quadratic_field import LocalPrime, QuadraticField
from .reduction import ReductionType, count_points, reduction_type
from .weierstrass import CurveModel, is_twist_by

Point = Optional[Tuple[Fraction, Fraction]]

X015_COEFFICIENTS = (1, 1, 1, -10, -10)
# the twist of X_0(15) by 2, Cremona 960G3
TWIST_960G3_COEFFICIENTS = (0, 1, 0, -641, -3105)

X015_PRIMES = {2: (7,), 17: (13, 43)}
X015_POINT_COUNTS = {7: 8, 13: 16, 43: 40}
TWIST_LABELS = {2: "960G3", 17: "4335D3"}


def x015_model(base: Optional[QuadraticField] = None) -> CurveModel:
    return CurveModel.from_coefficients(base or QuadraticField(1), X015_COEFFICIENTS)


def torsion_bound(E: CurveModel, primes: Sequence[int]) -> int:
    """``gcd`` of ``#E(F_q)`` over split primes ``q`` of good reduction."""
    if not primes:
        raise NoBoundPrimes("a torsion bound needs at least one prime")
    bound = 0
    for q in primes:
        v = LocalPrime(E.base, q)
        if v.kind not in ("split", "rational"):
            raise PrimeNotSplit(f"{q} is {v.kind} in {E.base}")
        if reduction_type(E, v) is not ReductionType.GOOD:
            raise BadReductionPrime(f"{E} has bad reduction at {q}")
        n = count_points(E, v)
        bound = gcd(bound, n)
        logging.debug("torsion bound after q=%d: %d", q, bound)
    return bound


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, m = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and m * m == q.denominator:
        return Fraction(n, m)
    return None


def rational_points(E: CurveModel, height: int = 50, max_denominator: int = 4) -> List[Point]:
    """Points of ``E(Q)`` with ``x = n / m^2``, ``|n| <= height``, ``m <= max_denominator``.

    ``None`` stands for the point at infinity.
    """
    if not all(a.is_rational() for a in E.a_invariants):
        raise CurveError("point search needs a model over Q")
    a1, a2, a3, a4, a6 = (a.x for a in E.a_invariants)
    found: List[Point] = [None]
    for m in range(1, max_denominator + 1):
        for n in range(-height, height + 1):
            if m > 1 and gcd(n, m) != 1:
                continue
            x = Fraction(n, m * m)
            b = a1 * x + a3
            disc = b * b + 4 * (x**3 + a2 * x * x + a4 * x + a6)
            root = _rational_sqrt(disc)
            if root is None:
                continue
            for y in sorted({(-b + root) / 2, (-b - root) / 2}):
                found.append((x, y))
    logging.debug("point search up to height %d found %d points", height, len(found))
    return found


def x0_cusp_count(N: int) -> int:
    """Number of cusps of ``X_0(N)``."""
    return int(sum(sympy.totient(gcd(c, N // c)) for c in sympy.divisors(N)))


def _format_point(P: Point) -> str:
    if P is None:
        return "O"
    return f"({P[0]},{P[1]})"


def parse_assumptions(source: Union[str, Path, Mapping[str, str], None]) -> Dict[str, str]:
    """``key=value`` lines; blank lines and ``#`` comments are skipped."""
    if source is None:
        return {}
    if isinstance(source, Mapping):
        return {str(k): str(v) for k, v in source.items()}
    path = Path(source)
    if not path.exists():
        raise MissingAssumption(f"assumption file {path} does not exist")
    out: Dict[str, str] = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise MissingAssumption(f"malformed assumption line {raw!r} in {path}")
        out[key.strip()] = value.strip()
    return out


def required_assumptions(d: int) -> List[str]:
    label = TWIST_LABELS[d]
    return ["rank.X015.Q", f"rank.{label}.Q", f"label.twist.d{d}"]


def x015_report(
    d: int,
    assumptions: Mapping[str, str],
    height: int = 50,
    source: str = "external",
) -> VerificationReport:
    """Points of ``X_0(15)`` over ``Q(sqrt(d))`` for ``d`` in ``{2, 17}``."""
    if d not in X015_PRIMES:
        raise CurveError(f"X_0(15) report is available for d in {sorted(X015_PRIMES)}, got {d}")
    missing = [k for k in required_assumptions(d) if k not in assumptions]
    if missing:
        raise MissingAssumption(f"missing assumptions: {', '.join(missing)}")
    report = VerificationReport(
        check_id="x015",
        claim=f"X_0(15) has exactly eight Q(sqrt({d}))-rational points, four of them cusps",
        inputs={"d": d, "search_height": height},
    )
    for key in required_assumptions(d):
        report.assume(key, assumptions[key], source)
    report.add_check(
        f"label.twist.d{d}", assumptions[f"label.twist.d{d}"], TWIST_LABELS[d], Provenance.REFERENCE
    )

    F = QuadraticField(d)
    E = x015_model(F)
    primes = X015_PRIMES[d]
    for q in primes:
        report.add_check(
            f"point_count.F{q}",
            count_points(E, LocalPrime(F, q)),
            X015_POINT_COUNTS[q],
            Provenance.REFERENCE,
        )
    bound = torsion_bound(E, primes)
    report.add_check("torsion_bound", bound, 8, Provenance.REFERENCE)

    E_Q = x015_model()
    points = rational_points(E_Q, height)
    report.add_check("rational_points", len(points), 8, Provenance.REFERENCE)
    report.add_check(
        "points_on_curve",
        all(P is None or E_Q.contains(*P) for P in points),
        True,
        Provenance.TRIVIAL,
    )
    cusps = x0_cusp_count(15)
    report.add_check("cusps", cusps, 4, Provenance.REFERENCE)
    if d == 2:
        twist = CurveModel.from_coefficients(E_Q.base, TWIST_960G3_COEFFICIENTS)
        report.add_check("twist_equation", is_twist_by(E_Q, twist, 2), True, Provenance.REFERENCE)

    ranks_zero = all(
        assumptions[k] == "0" for k in required_assumptions(d) if k.startswith("rank.")
    )
    report.add_check("ranks_zero", ranks_zero, True, Provenance.REFERENCE)
    if ranks_zero and len(points) == bound:
        conclusion = f"exactly {len(points)} points, {cusps} cusps"
    else:
        conclusion = f"torsion divides {bound}; {len(points)} rational points found"
    report.add_check("conclusion", conclusion, "exactly 8 points, 4 cusps", Provenance.REFERENCE)
    report.data.update(
        {
            "points": [_format_point(P) for P in points],
            "torsion_bound": bound,
            "primes": list(primes),
        }
    )
    return report


__all__ = [
    "X015_COEFFICIENTS",
    "parse_assumptions",
    "rational_points",
    "required_assumptions",
    "torsion_bound",
    "x015_model",
    "x015_report",
    "x0_cusp_count",
]
