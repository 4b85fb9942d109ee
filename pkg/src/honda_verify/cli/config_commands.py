from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from honda_verify.config import DEFAULT_CONFIG, USER_CONFIG_PATH, Config

config_app = typer.Typer(help="Manage honda-verify configuration settings.")


@config_app.command(
    "set",
    help="Sets a configuration key in the user's global config file.\n\nUsage Examples:\n  honda-verify config set search_height 80\n  honda-verify config set output_format text",
)
def set_config_command(
    ctx: typer.Context,
    key: str = typer.Argument(
        ...,
        help=f"The configuration key to set. Valid keys: {', '.join(DEFAULT_CONFIG.keys())}.",
    ),
    value: str = typer.Argument(..., help="The new value for the configuration key."),
) -> None:
    config: Config = ctx.obj["config"]
    # Config.set reports its own validation errors on stderr
    if not config.set(key, value):
        raise typer.Exit(code=1)
    typer.secho(
        f"Successfully set '{key}' to '{config.get(key)}' in the user global configuration: {USER_CONFIG_PATH}",
        fg=typer.colors.GREEN,
    )
    typer.echo(
        "Note: environment variables or a local '.hondaverify.yaml' may override this global setting."
    )


@config_app.command(
    "show",
    help="Displays effective configuration values and their sources.\n\nUsage Examples:\n  honda-verify config show\n  honda-verify config show --key workers",
)
def show_config_command(
    ctx: typer.Context,
    key: Optional[str] = typer.Option(
        None,
        "--key",
        "-k",
        help=f"Specific configuration key to display. Valid keys: {', '.join(DEFAULT_CONFIG.keys())}.",
    ),
) -> None:
    config: Config = ctx.obj["config"]
    console = Console(width=200)
    table = Table(title="honda-verify Configuration")
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Effective Value", style="magenta", overflow="fold")
    table.add_column("Source", style="green", no_wrap=True, overflow="fold")

    if key:
        if key not in config.get_all_keys():
            typer.secho(
                f"Error: Configuration key '{key}' is not a recognized key.",
                fg=typer.colors.RED,
                err=True,
            )
            typer.echo("Known configuration keys are:")
            for known_key in sorted(config.get_all_keys()):
                typer.echo(f"- {known_key}")
            raise typer.Exit(code=1)
        value, source_info = config.get_with_source(key)  # type: ignore[misc]
        table.add_row(key, str(value), source_info)
    else:
        for k, (value, source_info) in sorted(config.get_all_with_sources().items()):
            table.add_row(k, str(value), source_info)

    console.print(table)


__all__ = ["config_app"]
