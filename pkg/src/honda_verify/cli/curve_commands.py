import typer

from honda_verify.cli_utils import parse_prime_list
from honda_verify.curves import (
    LocalPrime,
    count_points,
    is_supersingular,
    parse_curve_spec,
    parse_prime,
    reduce_at,
    reduction_data,
    tame_inertia,
    torsion_bound,
)
from honda_verify.curves.reduction import hasse_interval
from honda_verify.curves.weierstrass import CurveModel
from honda_verify.reports import Provenance, VerificationReport

from .output import command_errors, emit

curve_app = typer.Typer(
    help="Invariants, reduction and formal group of a Weierstrass curve.\n\n"
    "Curves are given as 'a1,a2,a3,a4,a6 over Q(sqrt(d))' with coefficients "
    "written in s = sqrt(d), e.g. '0,s,0,1,1 over Q(sqrt(3))'."
)

CURVE_HELP = "Curve as 'a1,a2,a3,a4,a6 over Q' or '... over Q(sqrt(d))'."
PRIME_HELP = "Rational prime q below the place, 'q:1' for the second place of a split q."


def _setup(curve: str, prime: str) -> "tuple[CurveModel, LocalPrime]":
    E = parse_curve_spec(curve)
    return E, parse_prime(E.base, prime)


def _report(check_id: str, claim: str, E: CurveModel, **inputs: object) -> VerificationReport:
    return VerificationReport(
        check_id=check_id, claim=claim, inputs={"curve": str(E), **inputs}
    )


@curve_app.command("invariants", help="b- and c-invariants, discriminant and j.")
def invariants_command(
    ctx: typer.Context,
    curve: str = typer.Argument(..., help=CURVE_HELP),
) -> None:
    with command_errors():
        E = parse_curve_spec(curve)
        report = _report("curve.invariants", "Weierstrass invariants", E)
        b = E.b_invariants
        report.add_check(
            "1728*disc=c4^3-c6^2",
            1728 * E.discriminant,
            E.c4 ** 3 - E.c6 ** 2,
            Provenance.TRIVIAL,
        )
        report.add_check(
            "4*b8=b2*b6-b4^2",
            4 * b["b8"],
            b["b2"] * b["b6"] - b["b4"] ** 2,
            Provenance.TRIVIAL,
        )
        report.data.update(E.invariants())
    emit(ctx, report)


@curve_app.command("reduction", help="Reduction type at a place of odd residue characteristic.")
def reduction_command(
    ctx: typer.Context,
    curve: str = typer.Argument(..., help=CURVE_HELP),
    prime: str = typer.Option(..., "--prime", "-q", help=PRIME_HELP),
) -> None:
    with command_errors():
        E, v = _setup(curve, prime)
        data = reduction_data(E, v)
        report = _report("curve.reduction", f"reduction type at {v}", E, prime=prime)
        report.data.update(data.to_dict())
        report.data["place"] = {"kind": v.kind, "e": v.e, "f": v.f}
    emit(ctx, report)


@curve_app.command("count", help="Points of the reduction over the residue field.")
def count_command(
    ctx: typer.Context,
    curve: str = typer.Argument(..., help=CURVE_HELP),
    prime: str = typer.Option(..., "--prime", "-q", help=PRIME_HELP),
) -> None:
    with command_errors():
        E, v = _setup(curve, prime)
        n = count_points(E, v)
        lo, hi = hasse_interval(v.residue_order)
        report = _report("curve.count", f"#E(F_{v.residue_order})", E, prime=prime)
        report.add_check("hasse_bound", lo <= n <= hi, True, Provenance.TRIVIAL)
        report.data.update(
            {"points": n, "residue_order": v.residue_order, "trace": reduce_at(E, v).trace()}
        )
    emit(ctx, report)


@curve_app.command("supersingular", help="Whether the reduction has trace divisible by q.")
def supersingular_command(
    ctx: typer.Context,
    curve: str = typer.Argument(..., help=CURVE_HELP),
    prime: str = typer.Option(..., "--prime", "-q", help=PRIME_HELP),
) -> None:
    with command_errors():
        E, v = _setup(curve, prime)
        report = _report("curve.supersingular", f"supersingularity at {v}", E, prime=prime)
        report.data["supersingular"] = is_supersingular(E, v)
        report.data["trace"] = reduce_at(E, v).trace()
    emit(ctx, report)


@curve_app.command("newton", help="Newton polygon of [p](t) and the tame inertia type on E[p].")
def newton_command(
    ctx: typer.Context,
    curve: str = typer.Argument(..., help=CURVE_HELP),
    prime: str = typer.Option(..., "--prime", "-q", help=PRIME_HELP),
    p: int = typer.Option(3, "--p", help="The prime p of [p]; p = 3 unless --general."),
    general: bool = typer.Option(
        False, "--general", help="Allow p other than 3 (the criterion is only stated for 3)."
    ),
) -> None:
    cfg = ctx.obj["run_config"]
    with command_errors():
        E, v = _setup(curve, prime)
        result = tame_inertia(E, v, p, cfg.precision_for(p), allow_general=general)
        report = _report(
            "curve.newton", "tame inertia type from the Newton polygon of [p]", E, prime=prime, p=p
        )
        report.add_check("hull_convex", result.polygon.is_convex(), True, Provenance.TRIVIAL)
        report.data.update(result.to_dict())
    emit(ctx, report)


@curve_app.command("torsion", help="gcd of #E(F_q) over split primes of good reduction.")
def torsion_command(
    ctx: typer.Context,
    curve: str = typer.Argument(..., help=CURVE_HELP),
    primes: str = typer.Option(..., "--primes", help="Comma list of rational primes, e.g. 13,43."),
) -> None:
    with command_errors():
        E = parse_curve_spec(curve)
        qs = parse_prime_list(primes)
        report = _report("curve.torsion", "torsion bound from point counts", E, primes=qs)
        counts = {f"F{q}": count_points(E, LocalPrime(E.base, q)) for q in qs}
        report.data.update({"torsion_bound": torsion_bound(E, qs), "point_counts": counts})
    emit(ctx, report)


__all__ = ["curve_app"]
