"""Seeded random grid instances.

Randomness comes from numpy's PCG64 bit generator seeded through
``SeedSequence``, so a (parameters, seed) pair always yields the same instance.
Obstacles are resampled until the free cells form one connected component;
the 2m endpoints (m starts, m targets) are pairwise distinct cells.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from ..config import get_config
from ..core.graph import Graph, GridMap, build_graph_from_grid
from ..core.instance import Instance, Semantics
from ..exceptions import DisconnectedMapError, InfeasibleParametersError
from ..oracle.checks import wellformed_check

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _validate(width: int, height: int, obstacle_pct: float, m: int) -> int:
    if width <= 0 or height <= 0:
        raise InfeasibleParametersError(f"Grid {width}x{height} has no cells")
    if not 0 <= obstacle_pct < 100:
        raise InfeasibleParametersError(
            f"Obstacle percentage must be in [0, 100), got {obstacle_pct}"
        )
    if m < 0:
        raise InfeasibleParametersError(f"Agent count must be non-negative, got {m}")
    cells = width * height
    obstacles = int(np.floor(obstacle_pct * cells / 100))
    if cells - obstacles < 2 * m:
        raise InfeasibleParametersError(
            f"{cells - obstacles} free cells cannot hold {2 * m} distinct endpoints",
            attempts=0,
        )
    return obstacles


def _sample_map(
    rng: np.random.Generator,
    width: int,
    height: int,
    obstacles: int,
    max_attempts: int,
) -> tuple[GridMap, Graph]:
    for attempt in range(1, max_attempts + 1):
        flat = rng.choice(width * height, size=obstacles, replace=False)
        blocked = frozenset((int(i % width), int(i // width)) for i in flat)
        grid = GridMap(width, height, blocked)
        try:
            return grid, build_graph_from_grid(grid)
        except DisconnectedMapError:
            logger.debug("Map attempt %d is disconnected, resampling", attempt)
    raise InfeasibleParametersError(
        f"No connected {width}x{height} map with {obstacles} obstacles "
        f"after {max_attempts} attempts",
        attempts=max_attempts,
    )


def _sample_endpoints(
    rng: np.random.Generator, graph: Graph, m: int
) -> list[tuple[int, int]]:
    picks = rng.choice(graph.vertex_count, size=2 * m, replace=False).tolist()
    return list(zip(picks[:m], picks[m:]))


def generate_random_instance(
    width: int,
    height: int,
    obstacle_pct: float,
    m: int,
    seed: int,
    semantics: Semantics = Semantics.STAY,
    max_attempts: Optional[int] = None,
) -> Instance:
    attempts = max_attempts or get_config().generator_max_attempts
    obstacles = _validate(width, height, obstacle_pct, m)
    rng = make_rng(seed)
    _, graph = _sample_map(rng, width, height, obstacles, attempts)
    return Instance.from_endpoints(
        graph,
        _sample_endpoints(rng, graph, m),
        semantics,
        name=f"random-{width}x{height}-{obstacle_pct:g}-{m}-{seed}",
    )


def generate_wellformed_instance(
    width: int,
    height: int,
    obstacle_pct: float,
    m: int,
    seed: int,
    semantics: Semantics = Semantics.STAY,
    max_attempts: Optional[int] = None,
) -> Instance:
    """Like ``generate_random_instance`` but resamples the endpoints until every
    agent can reach its target while avoiding all other endpoints."""
    attempts = max_attempts or get_config().generator_max_attempts
    obstacles = _validate(width, height, obstacle_pct, m)
    rng = make_rng(seed)
    _, graph = _sample_map(rng, width, height, obstacles, attempts)
    name = f"wellformed-{width}x{height}-{obstacle_pct:g}-{m}-{seed}"
    for attempt in range(1, attempts + 1):
        instance = Instance.from_endpoints(
            graph, _sample_endpoints(rng, graph, m), semantics, name=name
        )
        if wellformed_check(instance):
            logger.debug("Well-formed endpoints found on attempt %d", attempt)
            return instance
    raise InfeasibleParametersError(
        f"No well-formed endpoint set after {attempts} attempts", attempts=attempts
    )


def grid_of(instance: Instance, width: int, height: int) -> GridMap:
    """Grid layout of a grid-derived instance (every cell without a vertex is blocked)."""
    coords = instance.graph.coords
    if coords is None:
        raise InfeasibleParametersError("Instance graph is not grid-derived")
    free = set(coords)
    blocked = frozenset(
        (x, y) for y in range(height) for x in range(width) if (x, y) not in free
    )
    return GridMap(width, height, blocked)
