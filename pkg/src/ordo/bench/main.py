#!/usr/bin/env python3
"""
Main entry point for the ordo CLI.
"""

import sys

import click
import rich_click as rc
from rich.console import Console
from rich.traceback import install

# Install rich traceback handler
install(show_locals=False)

# Configure rich-click
rc.rich_click.USE_RICH_MARKUP = True
rc.rich_click.USE_MARKDOWN = True
rc.rich_click.SHOW_ARGUMENTS = True
rc.rich_click.GROUP_ARGUMENTS_OPTIONS = True
rc.rich_click.SHOW_METAVARS_COLUMN = False
rc.rich_click.APPEND_METAVARS_HELP = True

from ordo.solver.exceptions import OrdoError  # noqa: E402

from .commands import bench_commands, solve_commands  # noqa: E402
from .config import get_settings  # noqa: E402
from .utils.console import configure_logging, get_console  # noqa: E402
from .utils.exceptions import handle_exception  # noqa: E402

console = Console(stderr=True)


@click.group(
    name="ordo",
    context_settings={"help_option_names": ["-h", "--help"]},
    invoke_without_command=True,
)
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable debug logging",
    envvar="ORDO_VERBOSE",
)
@click.option(
    "--quiet",
    "-q",
    is_flag=True,
    help="Suppress output",
    envvar="ORDO_QUIET",
)
@click.pass_context
def main(ctx: click.Context, verbose: bool, quiet: bool) -> None:
    """
    **ordo** - prioritized planning for multi-agent path finding

    ```bash
    ordo solve --algo pbs --graph tests/fixtures/pocket.graph
    ordo solve --algo cbs --map m.map --scen m.scen --agents 20 --timeout 60
    ordo verify --graph tests/fixtures/pocket.graph --solution out.txt
    ordo gen --width 20 --height 20 --obstacles 10 --agents 30 --seed 7 --out g
    ordo bench --config sweep.cfg --out runs.csv
    ordo aggregate runs.csv --compare cbs,cbswp,pbs,fix
    ```
    """
    if verbose and quiet:
        raise click.UsageError("Cannot use --verbose and --quiet together")

    if ctx.obj is None:
        ctx.obj = {}
    ctx.obj["verbose"] = verbose
    ctx.obj["quiet"] = quiet

    settings = get_settings()
    configure_logging(
        settings.LOG_LEVEL, verbose=verbose, quiet=quiet, fmt=settings.LOG_FORMAT
    )
    ctx.obj["console"] = get_console(verbose=verbose, quiet=quiet)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


main.add_command(solve_commands.solve)
main.add_command(solve_commands.verify)
main.add_command(solve_commands.enumerate_orderings)
main.add_command(solve_commands.gen)
main.add_command(bench_commands.bench)
main.add_command(bench_commands.aggregate_command)


def cli_main() -> None:
    """Entry point for the CLI.

    Runs click outside standalone mode so that usage errors exit with 1 like
    every other load or configuration failure.
    """
    try:
        code = main(standalone_mode=False)
    except (KeyboardInterrupt, click.Abort):
        console.print("\n[yellow]Operation cancelled by user[/yellow]")
        sys.exit(130)
    except click.ClickException as e:
        e.show()
        sys.exit(handle_exception(e))
    except OrdoError as e:
        console.print(f"[red]Error: {e}[/red]")
        sys.exit(1)
    except OSError as e:
        console.print(f"[red]Error: {e}[/red]")
        sys.exit(1)
    except Exception as e:
        console.print(f"[red]Unexpected error: {e}[/red]")
        if "--verbose" in sys.argv or "-v" in sys.argv:
            console.print_exception()
        sys.exit(1)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    cli_main()
