"""Single-agent planners.

Two space-time searches share one A* core:

* ``constrained_shortest_path`` respects a finite set of vertex/edge
  constraints (the low level of CBS and CBSw/P);
* ``prioritized_shortest_path`` treats the complete paths of higher-priority
  agents as moving obstacles up to their latest arrival ``T_max`` and then
  finishes with a time-free breadth-first distance on the graph without the
  permanently parked vertices (the low level of PBS).

Both prefer, among minimum-arrival paths, the ones that collide with the fewest
paths in a ``TieBreakContext``.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..core.collisions import CollisionKind, Constraint
from ..core.graph import UNREACHABLE, Graph
from ..core.instance import Agent, Path, Semantics
from ..core.stats import Deadline, SolverStats
from .occupancy import PathTable

logger = logging.getLogger(__name__)

MAX_GOAL_CANDIDATES = 4


@dataclass(frozen=True)
class SpaceTimeState:
    vertex: int
    time: int

    def __post_init__(self) -> None:
        if self.time < 0:
            raise ValueError(f"Negative time step {self.time}")


@dataclass(frozen=True)
class TieBreakContext:
    incomparable_paths: tuple[Path, ...] = ()
    lower_paths: tuple[Path, ...] = ()

    @classmethod
    def none(cls) -> TieBreakContext:
        return cls()


@dataclass(frozen=True)
class SearchBudget:
    node_expansion_limit: int = 10_000_000
    time_horizon: Optional[int] = None

    def __post_init__(self) -> None:
        if self.node_expansion_limit <= 0:
            raise ValueError("node_expansion_limit must be positive")
        if self.time_horizon is not None and self.time_horizon <= 0:
            raise ValueError("time_horizon must be positive")


@dataclass
class SearchContext:
    """Statistics sink, deadline and budget shared by the searches of one solve."""

    stats: SolverStats = field(default_factory=SolverStats)
    deadline: Deadline = field(default_factory=Deadline.unlimited)
    budget: SearchBudget = field(default_factory=SearchBudget)
    check_interval: int = 10_000

    def expanded(self) -> None:
        self.stats.low_level_expansions += 1
        if self.stats.low_level_expansions % self.check_interval == 0:
            self.deadline.check()


class _BudgetExhausted(Exception):
    pass


def _walk_down(
    graph: Graph, source: int, dist: Sequence[int], blocked: frozenset[int]
) -> list[int]:
    """Vertices after ``source`` along strictly decreasing ``dist`` (lowest id first)."""
    walk: list[int] = []
    v = source
    while dist[v] > 0:
        v = next(
            w
            for w in graph.neighbors(v)
            if w not in blocked and dist[w] == dist[v] - 1
        )
        walk.append(v)
    return walk


def individually_optimal_path(graph: Graph, agent: Agent) -> Path:
    """Shortest path from start to target ignoring every other agent."""
    dist = graph.distances_to(agent.target)
    return Path((agent.start, *_walk_down(graph, agent.start, dist, frozenset())))


def count_path_collisions(
    path: Path, other_paths: Sequence[Path], semantics: Semantics
) -> int:
    """Number of distinct paths in ``other_paths`` that ``path`` collides with."""
    if not other_paths:
        return 0
    return len(PathTable(other_paths, semantics).colliding_agents(path))


def _pick_candidate(
    candidates: list[Path], tie_tables: tuple[PathTable, PathTable]
) -> Path:
    if len(candidates) == 1:
        return candidates[0]
    return min(
        candidates,
        key=lambda p: tuple(len(t.colliding_agents(p)) for t in tie_tables),
    )


# (f, tie counts, h, seq, vertex, time, parent key, static suffix)
_Entry = tuple[
    int,
    tuple[int, int],
    int,
    int,
    int,
    int,
    Optional[tuple[int, int]],
    Optional[tuple[int, ...]],
]


def _space_time_astar(
    graph: Graph,
    agent: Agent,
    semantics: Semantics,
    horizon: int,
    heuristic: Sequence[int],
    can_step: Callable[[int, int, int], bool],
    is_goal: Callable[[int, int], bool],
    finish: Optional[Callable[[int], Optional[tuple[int, ...]]]],
    tie_tables: tuple[PathTable, PathTable],
    ctx: SearchContext,
) -> Optional[Path]:
    """Best-first search over (vertex, time) with g = time.

    ``finish`` is called for states reached at ``horizon``; it returns the static
    continuation to the target (or None) and turns the state into a terminal
    candidate whose arrival is exact. Without ``finish`` the search simply stops
    at the horizon.
    """
    ctx.stats.low_level_searches += 1
    counter = itertools.count()
    start, target = agent.start, agent.target
    if heuristic[start] == UNREACHABLE or not can_step(start, start, 0):
        return None

    open_list: list[_Entry] = [
        (heuristic[start], (0, 0), heuristic[start], next(counter), start, 0, None, None)
    ]
    parents: dict[tuple[int, int], Optional[tuple[int, int]]] = {}
    candidates: list[Path] = []
    best_f: Optional[int] = None
    local_expansions = 0

    def rebuild(v: int, t: int, suffix: tuple[int, ...] = ()) -> Path:
        vertices = list(suffix)
        vertices.reverse()
        key: Optional[tuple[int, int]] = (v, t)
        while key is not None:
            vertices.append(key[0])
            key = parents[key]
        vertices.reverse()
        return Path(tuple(vertices))

    def suffix_hits(v: int, t: int, suffix: tuple[int, ...]) -> tuple[int, int]:
        extra = [0, 0]
        previous = v
        for step, w in enumerate(suffix, start=1):
            for k, table in enumerate(tie_tables):
                extra[k] += table.step_hits(previous, w, t + step)
            previous = w
        return extra[0], extra[1]

    while open_list:
        f, ties, _, _, v, t, parent, suffix = heapq.heappop(open_list)
        if best_f is not None and (f > best_f or len(candidates) >= MAX_GOAL_CANDIDATES):
            break

        if suffix is not None:
            # terminal candidate: prefix already closed, static tail appended
            best_f = f
            candidates.append(rebuild(v, t, suffix))
            continue

        if (v, t) in parents:
            continue
        parents[(v, t)] = parent
        ctx.expanded()
        local_expansions += 1
        if local_expansions > ctx.budget.node_expansion_limit:
            raise _BudgetExhausted()

        if is_goal(v, t):
            best_f = f
            candidates.append(rebuild(v, t))
            continue
        if semantics is Semantics.DISAPPEAR and v == target:
            continue

        if t >= horizon:
            if finish is not None:
                tail = finish(v)
                if tail is not None:
                    extra = suffix_hits(v, t, tail)
                    heapq.heappush(
                        open_list,
                        (
                            t + len(tail),
                            (ties[0] + extra[0], ties[1] + extra[1]),
                            0,
                            next(counter),
                            v,
                            t,
                            parent,
                            tail,
                        ),
                    )
            continue

        nt = t + 1
        for w in (v, *graph.neighbors(v)):
            hw = heuristic[w]
            if hw == UNREACHABLE or (w, nt) in parents:
                continue
            if not can_step(v, w, nt):
                continue
            step_ties = (
                ties[0] + tie_tables[0].step_hits(v, w, nt),
                ties[1] + tie_tables[1].step_hits(v, w, nt),
            )
            heapq.heappush(
                open_list, (nt + hw, step_ties, hw, next(counter), w, nt, (v, t), None)
            )

    if not candidates:
        return None
    return _pick_candidate(candidates, tie_tables)


def _tie_tables(
    tie_ctx: TieBreakContext, semantics: Semantics
) -> tuple[PathTable, PathTable]:
    return (
        PathTable(tie_ctx.incomparable_paths, semantics),
        PathTable(tie_ctx.lower_paths, semantics),
    )


def constrained_shortest_path(
    graph: Graph,
    agent: Agent,
    constraints: Iterable[Constraint],
    tie_ctx: TieBreakContext = TieBreakContext(),
    semantics: Semantics = Semantics.STAY,
    ctx: Optional[SearchContext] = None,
) -> Optional[Path]:
    """Minimum-arrival path obeying every constraint on ``agent``.

    Under ``Semantics.STAY`` the path may only end at a time after the last
    vertex constraint on the target. The horizon is the latest constraint time
    plus |V| (or ``ctx.budget.time_horizon`` when set).
    """
    ctx = ctx or SearchContext()
    vertex_blocks: set[tuple[int, int]] = set()
    edge_blocks: set[tuple[int, int, int]] = set()
    latest = 0
    target_blocked_until = -1
    for c in constraints:
        if c.agent != agent.index:
            raise ValueError(f"Constraint {c} does not belong to agent {agent.index}")
        latest = max(latest, c.time)
        if c.kind is CollisionKind.VERTEX:
            vertex_blocks.add((c.vertices[0], c.time))
            if c.vertices[0] == agent.target:
                target_blocked_until = max(target_blocked_until, c.time)
        else:
            edge_blocks.add((c.vertices[0], c.vertices[1], c.time))

    horizon = ctx.budget.time_horizon or latest + graph.vertex_count

    def can_step(u: int, v: int, t: int) -> bool:
        if (v, t) in vertex_blocks:
            return False
        return u == v or (u, v, t) not in edge_blocks

    def is_goal(v: int, t: int) -> bool:
        if v != agent.target:
            return False
        return semantics is Semantics.DISAPPEAR or t > target_blocked_until

    try:
        path = _space_time_astar(
            graph,
            agent,
            semantics,
            horizon,
            graph.distances_to(agent.target),
            can_step,
            is_goal,
            None,
            _tie_tables(tie_ctx, semantics),
            ctx,
        )
    except _BudgetExhausted:
        logger.debug("Agent %d: node expansion limit reached", agent.index)
        return None
    if path is None:
        logger.debug("Agent %d: no path within horizon %d", agent.index, horizon)
    return path


def prioritized_shortest_path(
    graph: Graph,
    agent: Agent,
    higher_paths: Sequence[Path],
    semantics: Semantics,
    tie_ctx: TieBreakContext = TieBreakContext(),
    ctx: Optional[SearchContext] = None,
) -> Optional[Path]:
    """Minimum-arrival path that never collides with any of ``higher_paths``."""
    ctx = ctx or SearchContext()
    obstacles = PathTable(higher_paths, semantics)
    t_max = obstacles.horizon
    blocked = obstacles.parked_vertices
    if agent.target in blocked:
        return None

    reduced = graph.distances_to(agent.target, blocked=blocked)
    target_free_after = obstacles.last_occupied(agent.target)

    def can_step(u: int, v: int, t: int) -> bool:
        return obstacles.is_free(u, v, t)

    def is_goal(v: int, t: int) -> bool:
        if v != agent.target:
            return False
        return semantics is Semantics.DISAPPEAR or t > target_free_after

    def finish(v: int) -> Optional[tuple[int, ...]]:
        if reduced[v] == UNREACHABLE:
            return None
        return tuple(_walk_down(graph, v, reduced, blocked))

    try:
        path = _space_time_astar(
            graph,
            agent,
            semantics,
            t_max,
            graph.distances_to(agent.target),
            can_step,
            is_goal,
            finish,
            _tie_tables(tie_ctx, semantics),
            ctx,
        )
    except _BudgetExhausted:
        logger.debug("Agent %d: node expansion limit reached", agent.index)
        return None
    if path is None:
        logger.debug(
            "Agent %d: no path avoiding %d higher-priority paths",
            agent.index,
            len(higher_paths),
        )
    return path
