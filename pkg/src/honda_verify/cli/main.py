import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.table import Table

from honda_verify import __version__
from honda_verify.algebra.finite_field import GF
from honda_verify.checks.registry import available_checks, get_check, get_check_metadata, run_all
from honda_verify.cli_utils import parse_assumption_options, parse_delta
from honda_verify.config import Config
from honda_verify.curves.sylow2 import sylow2_check
from honda_verify.curves.torsion import parse_assumptions, x015_report
from honda_verify.exceptions import ConfigurationError
from honda_verify.ext_deform.extensions import verify_ext1
from honda_verify.ext_deform.ramified import build_M_Aprime, verify_basis_claim
from honda_verify.logging_utils import configure_logging
from honda_verify.numberfields.biquadratic import (
    BiquadraticField,
    class_number_one_check,
    parse_field_spec,
)
from honda_verify.numberfields.quadratic import quadratic_class_number_report
from honda_verify.raynaud.honda import honda_system, verify_honda
from honda_verify.raynaud.scheme import RaynaudScheme
from honda_verify.run_config import RunConfig

from .config_commands import config_app
from .curve_commands import curve_app
from .output import command_errors, emit

app = typer.Typer(
    help="honda-verify: exact checks of Witt covectors, Honda systems, Ext groups, "
    "elliptic curves and class numbers. Every command prints a JSON report; "
    "exit code 0 pass, 1 fail or error, 2 inconclusive, 64 usage."
)

app.add_typer(config_app, name="config")
app.add_typer(curve_app, name="curve")


def version_callback(value: bool) -> None:
    if value:
        typer.echo(f"honda-verify version: {__version__}")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main_callback(
    ctx: typer.Context,
    log_file: Optional[Path] = typer.Option(
        None,
        "--log-file",
        help="Path to write debug logs. If not set, logs are not written to file.",
        resolve_path=True,
        show_default=False,
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        "-V",
        help="Enable verbose (DEBUG level) logging.",
    ),
    json_output: Optional[bool] = typer.Option(
        None,
        "--json/--text",
        help="Report format; defaults to the 'output_format' setting.",
        show_default=False,
    ),
    search_height: Optional[int] = typer.Option(
        None, "--search-height", min=1, help="Height for generator and point searches."
    ),
    formal_precision: Optional[int] = typer.Option(
        None, "--formal-precision", min=0, help="Formal group precision; 0 means p^2+2."
    ),
    enumeration_limit: Optional[int] = typer.Option(
        None, "--enumeration-limit", min=1, help="Largest |k (x) F| for the Ext brute force."
    ),
    timings: Optional[bool] = typer.Option(
        None, "--timings/--no-timings", help="Include runtime_ms in reports.", show_default=False
    ),
    version: Optional[bool] = typer.Option(
        None,
        "-v",
        "--version",
        callback=version_callback,
        is_eager=True,
        help="Show the application version and exit.",
    ),
) -> None:
    """
    honda-verify CLI main entry point.
    Resolves logging, output format and run settings for every subcommand.
    """
    if ctx.obj is None:
        ctx.obj = {}

    config = Config()

    resolved_log_file = (
        log_file if log_file else Path(config.get("log_file")) if config.get("log_file") else None
    )
    resolved_verbose = verbose or config.get("verbose", False)

    if resolved_log_file:
        level = logging.DEBUG if resolved_verbose else logging.INFO
        configure_logging(resolved_log_file.expanduser().resolve(), level)
    elif resolved_verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s: %(message)s")
    else:
        # stdout carries the JSON report
        logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")

    if json_output is not None:
        config.update_from_cli("output_format", "json" if json_output else "text")
    config.update_from_cli("search_height", search_height)
    config.update_from_cli("formal_precision", formal_precision)
    config.update_from_cli("enumeration_limit", enumeration_limit)
    config.update_from_cli("include_timings", timings)

    ctx.obj["config"] = config
    ctx.obj["verbose"] = resolved_verbose
    ctx.obj["log_file"] = str(resolved_log_file) if resolved_log_file else None
    ctx.obj["output_format"] = config.get("output_format")
    with command_errors():
        try:
            ctx.obj["run_config"] = RunConfig.from_config(config)
        except ConfigurationError:
            # `config` commands run even when a stored setting is invalid
            if ctx.invoked_subcommand != "config":
                raise
            ctx.obj["run_config"] = RunConfig()


@app.command("honda", help="Build the Honda system of a Raynaud scheme and run every structural check.")
def honda_command(
    ctx: typer.Context,
    p: int = typer.Option(3, "--p", help="Odd prime p <= 17."),
    r: int = typer.Option(2, "--r", min=1, help="Number of generators X_1..X_r."),
    delta: str = typer.Option("p,1", "--delta", help="Comma list of 'p' and '1', one per generator."),
    depth: Optional[int] = typer.Option(
        None, "--depth", min=1, help="Covector truncation window; defaults to 2r+2."
    ),
    k_deg: int = typer.Option(1, "--k-deg", min=1, help="Degree of the residue field k over F_p."),
) -> None:
    cfg: RunConfig = ctx.obj["run_config"]
    with command_errors():
        labels = parse_delta(delta, r)
        G = RaynaudScheme(p, r, labels, k_deg)
        report = verify_honda(G, depth or cfg.depth_for(r))
    emit(ctx, report)


@app.command("ext", help="Compare the brute-force Ext^1 count with the closed form.")
def ext_command(
    ctx: typer.Context,
    k_deg: int = typer.Option(1, "--k-deg", min=1, help="[k:F_p]."),
    f_deg: int = typer.Option(1, "--f-deg", min=1, help="[F:F_p] for the coefficient field F."),
    p: int = typer.Option(3, "--p", help="Residue characteristic."),
) -> None:
    cfg: RunConfig = ctx.obj["run_config"]
    with command_errors():
        report = verify_ext1(GF(p, k_deg), GF(p, f_deg), cfg.enumeration_limit)
    emit(ctx, report)


@app.command("maprime", help="Length and listed basis of M_A' over a ramified base of index e.")
def maprime_command(
    ctx: typer.Context,
    p: int = typer.Option(3, "--p", help="Odd prime p <= 17."),
    e: int = typer.Option(2, "--e", min=1, help="Ramification index, 1 <= e <= p-1."),
    k_deg: int = typer.Option(1, "--k-deg", min=1, help="[k:F_p]."),
) -> None:
    cfg: RunConfig = ctx.obj["run_config"]
    with command_errors():
        G = RaynaudScheme(p, 2, ("p", "1"), k_deg)
        model = build_M_Aprime(honda_system(G, cfg.depth_for(2)), e)
        report = verify_basis_claim(model, cfg.enumeration_limit)
    emit(ctx, report)


@app.command("x015", help="Rational points of X_0(15) over Q(sqrt(d)) for d in {2, 17}.")
def x015_command(
    ctx: typer.Context,
    d: int = typer.Option(2, "--d", help="Radicand: 2 or 17."),
    assume: Optional[Path] = typer.Option(
        None,
        "--assume",
        help="File of key=value lines (rank.X015.Q, rank.<twist>.Q, label.twist.d<d>).",
        show_default=False,
    ),
    assume_inline: Optional[List[str]] = typer.Option(
        None, "--set", help="Inline assumption key=value; repeatable, overrides the file."
    ),
    source: str = typer.Option("external", "--source", help="Where the assumptions come from."),
) -> None:
    cfg: RunConfig = ctx.obj["run_config"]
    with command_errors():
        inline = parse_assumption_options(assume_inline)
        assumptions = {**parse_assumptions(assume), **inline} if assume else inline
        report = x015_report(d, assumptions, cfg.search_height, source)
    emit(ctx, report)


@app.command("classno", help="Class number of Q(sqrt(a)) or class number one for Q(sqrt(a),sqrt(b)).")
def classno_command(
    ctx: typer.Context,
    field_spec: str = typer.Argument(..., help="'Q(sqrt(a))' or 'Q(sqrt(a),sqrt(b))'."),
) -> None:
    cfg: RunConfig = ctx.obj["run_config"]
    with command_errors():
        radicands = parse_field_spec(field_spec)
        if len(radicands) == 1:
            report = quadratic_class_number_report(radicands[0], cfg.search_height)
        else:
            report = class_number_one_check(
                BiquadraticField(*radicands), cfg.search_height, progress=ctx.obj["verbose"]
            )
    emit(ctx, report)


@app.command("sylow2", help="The 2-Sylow subgroup of GL_2(F_3) generated by tau and c.")
def sylow2_command(ctx: typer.Context) -> None:
    with command_errors():
        report = sylow2_check()
    emit(ctx, report)


@app.command("verify-all", help="Run every registered check (or the chosen ones) and aggregate.")
def verify_all_command(
    ctx: typer.Context,
    check: Optional[List[str]] = typer.Option(
        None, "--check", "-c", help="Check id to run; repeatable. Defaults to all."
    ),
    workers: Optional[int] = typer.Option(
        None, "--workers", "-w", min=1, help="Threads to run checks on."
    ),
    progress: bool = typer.Option(False, "--progress", help="Show a progress bar on stderr."),
) -> None:
    config: Config = ctx.obj["config"]
    with command_errors():
        config.update_from_cli("workers", workers)
        cfg = RunConfig.from_config(config)
        ids = list(check) if check else None
        for cid in ids or []:
            get_check(cid)
        report = run_all(cfg, ids, progress=progress)
    emit(ctx, report)


@app.command("list-checks", help="List the registered verification checks in run order.")
def list_checks_command() -> None:
    table = Table("Check ID", "Group", "Claim", title="Registered Checks")
    for cid in available_checks():
        info = get_check_metadata(cid) or {}
        table.add_row(cid, str(info.get("group", "")), str(info.get("claim", "")))
    Console(width=160).print(table)
