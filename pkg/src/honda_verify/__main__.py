import sys
from typing import List, Optional

import click

try:  # newer typer vendors click; catch the exception classes it raises
    from typer._click import exceptions as _click_exc
except ImportError:  # pragma: no cover - typer built on upstream click
    _click_exc = click

try:  # optional pretty tracebacks
    from rich.traceback import install as install_rich_traceback

    install_rich_traceback()
except Exception:  # pragma: no cover - rich may not be installed
    pass

USAGE_EXIT_CODE = 64


def main(argv: Optional[List[str]] = None) -> None:
    """Entry point for the ``honda-verify`` command.

    Click reports usage errors with exit code 2, which this tool reserves
    for inconclusive results; they are remapped to 64 here.
    """
    args = list(sys.argv[1:] if argv is None else argv)

    from .cli import app

    try:
        code = app(args=args, prog_name="honda-verify", standalone_mode=False)
    except _click_exc.UsageError as exc:
        exc.show()
        sys.exit(USAGE_EXIT_CODE)
    except _click_exc.ClickException as exc:
        exc.show()
        sys.exit(1)
    except _click_exc.Abort:
        click.echo("Aborted!", err=True)
        sys.exit(1)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
