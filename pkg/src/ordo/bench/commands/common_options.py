"""
Common CLI options and decorators for ordo commands.

Reusable options applied to several commands so that instance loading,
timeouts and semantics read the same everywhere.
"""

from pathlib import Path
from typing import Callable, Optional

import click

from ordo.solver.core.instance import Instance, Semantics
from ordo.solver.exceptions import OrdoError
from ordo.solver.io import parse_graph_fixture, parse_map, parse_scen

from ..utils.exceptions import ConfigurationError, InstanceLoadError


def timeout_option(default: Optional[float] = None) -> Callable:
    """Add timeout option to command with configurable default."""

    def decorator(f: Callable) -> Callable:
        return click.option(
            "--timeout",
            type=float,
            default=default,
            help="Wall-clock limit per solve in seconds (default: ORDO_TIMEOUT or 60)",
            envvar="ORDO_TIMEOUT",
        )(f)

    return decorator


def semantics_option(f: Callable) -> Callable:
    """Add semantics option to command."""
    return click.option(
        "--semantics",
        type=click.Choice([s.value for s in Semantics]),
        default=None,
        help="What agents do at their target (default: stay, or the fixture's own)",
    )(f)


def seed_option(f: Callable) -> Callable:
    """Add seed option to command."""
    return click.option(
        "--seed",
        type=int,
        default=0,
        show_default=True,
        help="Seed for generators and randomized orderings",
    )(f)


def instance_options(f: Callable) -> Callable:
    """Apply the options that select an instance: a graph fixture, or a
    movingai map plus scenario and agent count."""
    f = click.option(
        "--agents",
        "-m",
        type=int,
        help="Number of scenario entries to use",
    )(f)
    f = click.option(
        "--scen",
        "scen_path",
        type=click.Path(dir_okay=False, path_type=Path),
        help="movingai scenario file",
    )(f)
    f = click.option(
        "--map",
        "map_path",
        type=click.Path(dir_okay=False, path_type=Path),
        help="movingai map file",
    )(f)
    f = click.option(
        "--graph",
        "--instance",
        "graph_path",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Explicit graph fixture file",
    )(f)
    f = semantics_option(f)
    return f


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceLoadError(str(path), e.strerror or str(e)) from e


def load_instance(
    graph_path: Optional[Path],
    map_path: Optional[Path],
    scen_path: Optional[Path],
    agents: Optional[int],
    semantics: Optional[str],
) -> Instance:
    """Build the instance selected by ``instance_options``."""
    if graph_path is not None:
        if map_path or scen_path:
            raise ConfigurationError("use either --graph or --map/--scen, not both")
        try:
            instance = parse_graph_fixture(_read(graph_path), name=graph_path.name)
        except OrdoError as e:
            raise InstanceLoadError(str(graph_path), str(e)) from e
        return instance.with_semantics(Semantics(semantics)) if semantics else instance

    if map_path is None or scen_path is None:
        raise ConfigurationError("an instance needs --graph, or --map and --scen")
    map_text = _read(map_path)
    scen_text = _read(scen_path)
    try:
        grid = parse_map(map_text)
        if agents is None:
            raise ConfigurationError("--agents is required with --scen")
        return parse_scen(
            scen_text,
            grid,
            agents,
            Semantics(semantics or Semantics.STAY),
            name=map_path.name,
        )
    except OrdoError as e:
        raise InstanceLoadError(f"{map_path} / {scen_path}", str(e)) from e


def parse_order(text: Optional[str], num_agents: int) -> Optional[list[int]]:
    """``"2,1,3"`` (1-based, highest priority first) to 0-based indices."""
    if text is None:
        return None
    try:
        order = [int(part) - 1 for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError(f"--order must be comma-separated integers, got '{text}'")
    if sorted(order) != list(range(num_agents)):
        raise ConfigurationError(
            f"--order must be a permutation of 1..{num_agents}, got '{text}'"
        )
    return order
