"""
Experiment commands: bench and aggregate.
"""

from pathlib import Path
from typing import Optional

import click

from ..config import load_bench_config
from ..runner import (
    aggregate,
    aggregate_frame,
    flowtime_ratios,
    read_csv,
    run_experiment,
)
from ..utils.console import frame_table, print_header, print_success


@click.command(name="bench")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    required=True,
    help="Experiment config (key=value lines)",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    required=True,
    help="CSV file for the run records",
)
@click.option("--threads", "-j", type=int, default=None, help="Worker threads (default: MAPF_THREADS or 1)")
@click.pass_context
def bench(ctx: click.Context, config_path: Path, out: Path, threads: Optional[int]) -> None:
    """Run an algorithm x instance sweep and write one CSV row per run."""
    console = ctx.obj["console"]
    config = load_bench_config(config_path)
    records = run_experiment(config, out, threads=threads)
    print_success(console, f"{len(records)} runs written to {out}")

    rows = aggregate(records, timeout=config.timeout)
    print_header(console, "Summary")
    console.print(frame_table(aggregate_frame(rows)))


@click.command(name="aggregate")
@click.argument("csv_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "--compare",
    help="Comma-separated algorithms whose commonly solved instances define the means",
)
@click.option("--timeout", type=float, default=None, help="Count timed-out runs with this runtime")
@click.option("--reference", help="Also print flowtime ratios against this algorithm")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the aggregate table as CSV",
)
@click.pass_context
def aggregate_command(
    ctx: click.Context,
    csv_path: Path,
    compare: Optional[str],
    timeout: Optional[float],
    reference: Optional[str],
    out: Optional[Path],
) -> None:
    """Summarize an existing run CSV per algorithm and agent count."""
    console = ctx.obj["console"]
    records = read_csv(csv_path)
    comparison = [a.strip().lower() for a in compare.split(",")] if compare else None
    frame = aggregate_frame(aggregate(records, comparison, timeout))
    console.print(frame_table(frame, title=str(csv_path)))
    if out is not None:
        frame.to_csv(out, index=False)
        print_success(console, f"Aggregate written to {out}")
    if reference:
        ratios = flowtime_ratios(records, reference.lower())
        console.print(frame_table(ratios, title=f"Flowtime ratio to {reference}"))
