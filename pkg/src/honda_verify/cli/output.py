import json
import logging
from contextlib import contextmanager
from typing import Iterator, Union

import typer
from rich.console import Console
from rich.table import Table

from honda_verify.exceptions import (
    ConfigurationError,
    CurveSpecError,
    HondaVerifyError,
    SearchInconclusive,
)
from honda_verify.reports import AggregateReport, Status, VerificationReport, exit_code_for

USAGE_EXIT_CODE = 64

_STATUS_STYLE = {
    Status.PASS.value: "green",
    Status.FAIL.value: "red",
    Status.INCONCLUSIVE.value: "yellow",
}

# errors that mean the command line itself was wrong
_USAGE_ERRORS = (typer.BadParameter, CurveSpecError, ConfigurationError)


def _short(value: object, width: int = 60) -> str:
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
    return text if len(text) <= width else text[: width - 3] + "..."


def render_text(report: VerificationReport, console: Console) -> None:
    style = _STATUS_STYLE[report.status.value]
    console.print(f"[bold]{report.check_id}[/bold]: {report.claim} [{style}]{report.status.value}[/{style}]")
    if report.error:
        console.print(f"  [red]error[/red] {report.error}")
    if report.checks:
        table = Table("Check", "Status", "Computed", "Expected", "Provenance")
        for item in report.checks:
            s = _STATUS_STYLE[item.status.value]
            table.add_row(
                item.name,
                f"[{s}]{item.status.value}[/{s}]",
                _short(item.computed),
                _short(item.expected),
                item.provenance.value,
            )
        console.print(table)
    for a in report.assumptions:
        console.print(f"  assumes {a.key} = {a.value} ({a.source})")


def emit(ctx: typer.Context, report: Union[VerificationReport, AggregateReport]) -> None:
    """Print ``report`` in the selected format and exit with its status code."""
    include_timings = ctx.obj["run_config"].include_timings
    if ctx.obj["output_format"] == "text":
        console = Console(width=160)
        reports = report.reports if isinstance(report, AggregateReport) else [report]
        for r in reports:
            render_text(r, console)
        if isinstance(report, AggregateReport):
            console.print(f"summary: {report.counts}")
    else:
        typer.echo(report.to_json(include_timings))
    code = exit_code_for(report.status)
    if code:
        raise typer.Exit(code=code)


def fail(exc: Exception, code: int = 1) -> None:
    typer.secho(f"Error: {type(exc).__name__}: {exc}", err=True, fg=typer.colors.RED)
    raise typer.Exit(code=code)


@contextmanager
def command_errors() -> Iterator[None]:
    """Map bad arguments to 64, unfinished searches to 2 and library errors to 1."""
    try:
        yield
    except _USAGE_ERRORS as exc:
        fail(exc, USAGE_EXIT_CODE)
    except SearchInconclusive as exc:
        fail(exc, exit_code_for(Status.INCONCLUSIVE))
    except HondaVerifyError as exc:
        logging.debug("command failed", exc_info=True)
        fail(exc, 1)


__all__ = ["USAGE_EXIT_CODE", "command_errors", "emit", "fail", "render_text"]
