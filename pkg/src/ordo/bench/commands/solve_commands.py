"""
Single-instance commands: solve, verify, enumerate and gen.
"""

from pathlib import Path
from typing import Optional

import click
import pandas as pd

from ordo.solver.config import get_config
from ordo.solver.core.collisions import validate_solution
from ordo.solver.core.instance import Semantics
from ordo.solver.core.stats import SolveResult
from ordo.solver.exceptions import OrdoError
from ordo.solver.io import (
    format_solution,
    generate_random_instance,
    generate_wellformed_instance,
    grid_of,
    parse_solution,
    scenario_entries,
    serialize_map,
    serialize_scen,
)
from ordo.solver.oracle import enumerate_total_orderings

from ..config import ALGORITHMS
from ..runner import run_algorithm
from ..utils.console import (
    format_duration,
    frame_table,
    print_error,
    print_header,
    print_success,
    print_warning,
)
from ..utils.exceptions import (
    EXIT_NO_SOLUTION,
    EXIT_TIMEOUT,
    ConfigurationError,
    InstanceLoadError,
    ValidationError,
)
from .common_options import (
    instance_options,
    load_instance,
    parse_order,
    seed_option,
    semantics_option,
    timeout_option,
)

_EXIT_CODES = {
    SolveResult.SOLVED: 0,
    SolveResult.NO_SOLUTION: EXIT_NO_SOLUTION,
    SolveResult.TIMEOUT: EXIT_TIMEOUT,
}


@click.command(name="solve")
@click.option(
    "--algo",
    "algorithm",
    type=click.Choice(ALGORITHMS, case_sensitive=False),
    required=True,
    help="Algorithm to run",
)
@instance_options
@timeout_option()
@seed_option
@click.option("--order", help="Total ordering for fix/pbs, 1-based, highest first (e.g. 2,1,3)")
@click.option("--rnd-runs", type=int, default=None, help="Number of RND runs")
@click.option(
    "--solution",
    "solution_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the solution file here",
)
@click.pass_context
def solve(
    ctx: click.Context,
    algorithm: str,
    graph_path: Optional[Path],
    map_path: Optional[Path],
    scen_path: Optional[Path],
    agents: Optional[int],
    semantics: Optional[str],
    timeout: Optional[float],
    seed: int,
    order: Optional[str],
    rnd_runs: Optional[int],
    solution_path: Optional[Path],
) -> None:
    """Solve one instance and print its statistics.

    Exit code 0 when solved, 2 when no solution exists, 3 on timeout.
    """
    console = ctx.obj["console"]
    instance = load_instance(graph_path, map_path, scen_path, agents, semantics)
    total_order = parse_order(order, instance.num_agents)
    if total_order is not None and algorithm.lower() not in ("fix", "pbs"):
        raise ConfigurationError("--order only applies to fix and pbs")

    outcome = run_algorithm(
        algorithm,
        instance,
        timeout=timeout,
        seed=seed,
        order=total_order,
        rnd_runs=rnd_runs,
        config=get_config(),
    )
    stats = outcome.stats

    print_header(console, f"{algorithm.upper()} on {instance.name or 'instance'}")
    console.print(f"  agents:        {instance.num_agents}")
    console.print(f"  semantics:     {instance.semantics.value}")
    console.print(f"  result:        {outcome.result.value}")
    console.print(f"  runtime:       {format_duration(stats.runtime)}")
    console.print(f"  flowtime:      {outcome.flowtime if outcome.solved else '-'}")
    console.print(f"  makespan:      {outcome.makespan if outcome.solved else '-'}")
    console.print(f"  hl expansions: {stats.high_level_expansions}")
    console.print(f"  ll expansions: {stats.low_level_expansions}")
    if outcome.ordering is not None and outcome.solved:
        console.print(f"  ordering:      {outcome.ordering!r}", markup=False)

    if outcome.solved:
        assert outcome.plan is not None
        text = format_solution(instance, outcome.plan)
        if solution_path is not None:
            try:
                solution_path.write_text(text, encoding="utf-8")
            except OSError as e:
                raise InstanceLoadError(str(solution_path), str(e)) from e
            print_success(console, f"Solution written to {solution_path}")
        else:
            console.print(text, markup=False, end="")
    elif outcome.result is SolveResult.TIMEOUT:
        print_warning(console, "Time limit reached")
    else:
        print_error(console, "No solution found")
    ctx.exit(_EXIT_CODES[outcome.result])


@click.command(name="verify")
@instance_options
@click.option(
    "--solution",
    "solution_path",
    type=click.Path(dir_okay=False, path_type=Path),
    required=True,
    help="Solution file to check",
)
@click.pass_context
def verify(
    ctx: click.Context,
    graph_path: Optional[Path],
    map_path: Optional[Path],
    scen_path: Optional[Path],
    agents: Optional[int],
    semantics: Optional[str],
    solution_path: Path,
) -> None:
    """Check that a solution file is a valid, collision-free solution."""
    console = ctx.obj["console"]
    instance = load_instance(graph_path, map_path, scen_path, agents, semantics)
    try:
        plan = parse_solution(solution_path.read_text(encoding="utf-8"), instance)
    except OSError as e:
        raise InstanceLoadError(str(solution_path), e.strerror or str(e)) from e
    except OrdoError as e:
        raise InstanceLoadError(str(solution_path), str(e)) from e

    violations = validate_solution(instance, plan)
    if violations:
        for violation in violations:
            print_error(console, violation.message)
        raise ValidationError(str(solution_path), f"{len(violations)} violation(s)")
    print_success(
        console,
        f"Valid solution: flowtime {sum(plan.arrivals)}, makespan {max(plan.arrivals, default=0)}",
    )


@click.command(name="enumerate")
@instance_options
@timeout_option()
@click.option("--max-agents", type=int, default=None, help="Refuse larger instances")
@click.pass_context
def enumerate_orderings(
    ctx: click.Context,
    graph_path: Optional[Path],
    map_path: Optional[Path],
    scen_path: Optional[Path],
    agents: Optional[int],
    semantics: Optional[str],
    timeout: Optional[float],
    max_agents: Optional[int],
) -> None:
    """Run prioritized planning once per total ordering (tiny instances only)."""
    console = ctx.obj["console"]
    instance = load_instance(graph_path, map_path, scen_path, agents, semantics)
    try:
        outcomes = enumerate_total_orderings(instance, max_agents, timeout)
    except OrdoError as e:
        raise ConfigurationError(str(e)) from e

    frame = pd.DataFrame(
        {
            "ordering": [" < ".join(str(a + 1) for a in o.order) for o in outcomes],
            "result": [o.result.value for o in outcomes],
            "flowtime": pd.array([o.flowtime for o in outcomes], dtype="Int64"),
        }
    )
    console.print(frame_table(frame, title=f"Total orderings of {instance.name or 'instance'}"))
    solved = sum(o.solved for o in outcomes)
    console.print(f"{solved} of {len(outcomes)} orderings solve the instance")


@click.command(name="gen")
@click.option("--width", type=int, required=True, help="Grid width")
@click.option("--height", type=int, required=True, help="Grid height")
@click.option("--obstacles", type=float, default=0.0, show_default=True, help="Blocked cells in percent")
@click.option("--agents", "-m", type=int, required=True, help="Number of agents")
@seed_option
@semantics_option
@click.option("--well-formed", is_flag=True, help="Resample until the instance is well-formed")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write OUT.map and OUT.scen instead of printing",
)
@click.pass_context
def gen(
    ctx: click.Context,
    width: int,
    height: int,
    obstacles: float,
    agents: int,
    seed: int,
    semantics: Optional[str],
    well_formed: bool,
    out: Optional[Path],
) -> None:
    """Generate a seeded random grid instance as a movingai map and scenario."""
    console = ctx.obj["console"]
    generate = generate_wellformed_instance if well_formed else generate_random_instance
    try:
        instance = generate(
            width, height, obstacles, agents, seed, Semantics(semantics or Semantics.STAY)
        )
    except OrdoError as e:
        raise ConfigurationError(str(e)) from e

    grid = grid_of(instance, width, height)
    map_name = f"{out.name}.map" if out else f"{instance.name}.map"
    map_text = serialize_map(grid)
    scen_text = serialize_scen(scenario_entries(instance, map_name, grid))
    if out is None:
        console.print(map_text, markup=False, end="")
        console.print(scen_text, markup=False, end="")
        return
    map_file = out.with_name(f"{out.name}.map")
    scen_file = out.with_name(f"{out.name}.scen")
    try:
        map_file.write_text(map_text, encoding="utf-8")
        scen_file.write_text(scen_text, encoding="utf-8")
    except OSError as e:
        raise InstanceLoadError(str(out), str(e)) from e
    print_success(console, f"Wrote {map_file} and {scen_file}")
