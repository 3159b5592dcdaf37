"""
Console utilities for the ordo CLI.

Provides the themed rich console used for all user-facing output and the
logging setup that routes library log records through rich.
"""

import logging
import sys
from typing import Optional

import pandas as pd
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich.theme import Theme

ordo_theme = Theme(
    {
        "info": "cyan",
        "warning": "yellow",
        "error": "red bold",
        "success": "green",
        "accent": "blue bold",
        "muted": "dim",
        "highlight": "magenta",
    }
)


def get_console(
    verbose: bool = False,
    quiet: bool = False,
    force_terminal: Optional[bool] = None,
    width: Optional[int] = None,
) -> Console:
    """
    Get a configured Rich console instance.

    Args:
        verbose: Enable verbose output
        quiet: Suppress output
        force_terminal: Force terminal mode
        width: Console width

    Returns:
        Configured Rich console
    """
    if force_terminal is None:
        force_terminal = sys.stdout.isatty() and not quiet

    return Console(
        theme=ordo_theme,
        force_terminal=force_terminal,
        width=width,
        quiet=quiet,
        stderr=False,
    )


def configure_logging(
    level: str,
    verbose: bool = False,
    quiet: bool = False,
    fmt: str = "%(message)s",
) -> None:
    """Route log records through a RichHandler on stderr.

    ``--verbose`` forces DEBUG and ``--quiet`` forces WARNING; otherwise
    ``level`` (from the settings) applies. ``fmt`` is the record format
    (``MAPF_LOG_FORMAT``); RichHandler adds time and level itself.
    """
    if verbose:
        level = "DEBUG"
    elif quiet:
        level = "WARNING"
    logging.basicConfig(
        level=level.upper(),
        format=fmt,
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True)],
        force=True,
    )


def print_header(console: Console, text: str) -> None:
    console.print(f"\n[accent]{text}[/accent]", style="bold")


def print_success(console: Console, text: str) -> None:
    console.print(f"[success]{text}[/success]")


def print_error(console: Console, text: str) -> None:
    console.print(f"[error]{text}[/error]")


def print_warning(console: Console, text: str) -> None:
    console.print(f"[warning]{text}[/warning]")


def format_duration(seconds: float) -> str:
    """
    Format duration in human-readable format.

    Args:
        seconds: Duration in seconds

    Returns:
        Formatted duration string
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    if seconds < 60:
        return f"{seconds:.2f}s"
    return f"{seconds / 60:.1f}m"


def frame_table(frame: pd.DataFrame, title: Optional[str] = None) -> Table:
    """Render a pandas DataFrame as a rich table (missing values shown as '-')."""
    table = Table(title=title, header_style="accent")
    for column in frame.columns:
        table.add_column(str(column))
    for row in frame.itertuples(index=False):
        table.add_row(
            *("-" if pd.isna(value) else _cell(value) for value in row)
        )
    return table


def _cell(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.3f}".rstrip("0").rstrip(".")
    return str(value)
