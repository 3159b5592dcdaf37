"""Conflict-Based Search and its prioritized variant CBSw/P.

Both share one best-first constraint-tree search. In ``CBSMode.WITH_PRIORITIES``
each node additionally carries a priority ordering: constraining agent i in a
collision with j adds j before i, and the child is never generated when i
already precedes j.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..config import Config
from ..core.collisions import Collision, Constraint, constraint_for, detect_collisions
from ..core.instance import Instance, Path, Plan
from ..core.ordering import PriorityOrdering
from ..core.stats import SolveOutcome, SolveResult
from ..interfaces.base import BaseSolver
from ..search.lowlevel import (
    SearchBudget,
    SearchContext,
    TieBreakContext,
    constrained_shortest_path,
)

logger = logging.getLogger(__name__)


class CBSMode(str, Enum):
    PLAIN = "plain"
    WITH_PRIORITIES = "with_priorities"


@dataclass(frozen=True, eq=False)
class CTNode:
    constraints: frozenset[Constraint]
    plan: Plan
    cost: int
    ordering: PriorityOrdering
    generation_id: int
    collisions: tuple[Collision, ...] = ()

    @property
    def num_collisions(self) -> int:
        return len(self.collisions)

    def constraints_on(self, agent: int) -> list[Constraint]:
        return [c for c in self.constraints if c.agent == agent]

    @property
    def heap_key(self) -> tuple[int, int, int]:
        return (self.cost, self.num_collisions, self.generation_id)


def choose_collision(node: CTNode) -> Optional[Collision]:
    """Earliest collision, ties broken by the lowest agent pair."""
    if not node.collisions:
        return None
    return min(node.collisions, key=lambda c: c.sort_key)


def _tie_context(
    plan: Plan, agent: int, ordering: PriorityOrdering, mode: CBSMode
) -> TieBreakContext:
    if mode is CBSMode.PLAIN:
        others = tuple(p for k, p in enumerate(plan) if k != agent)
        return TieBreakContext(incomparable_paths=others)
    return TieBreakContext(
        incomparable_paths=tuple(plan[k] for k in ordering.incomparable_with(agent)),
        lower_paths=tuple(plan[k] for k in ordering.lower_than(agent)),
    )


def _make_node(
    instance: Instance,
    constraints: frozenset[Constraint],
    plan: Plan,
    ordering: PriorityOrdering,
    generation_id: int,
) -> CTNode:
    return CTNode(
        constraints=constraints,
        plan=plan,
        cost=sum(plan.arrivals),
        ordering=ordering,
        generation_id=generation_id,
        collisions=tuple(detect_collisions(instance, plan)),
    )


def expand_ct_node(
    node: CTNode,
    collision: Collision,
    side: int,
    mode: CBSMode,
    instance: Instance,
    ctx: Optional[SearchContext] = None,
    generation_id: int = 0,
) -> Optional[CTNode]:
    """Child of ``node`` that constrains ``collision.agents[side]``, or None when
    the child is suppressed by the ordering or its replanning fails."""
    constrained = collision.agents[side]
    other = collision.other(constrained)
    ordering = node.ordering

    if mode is CBSMode.WITH_PRIORITIES:
        if ordering.precedes(constrained, other):
            return None
        if not ordering.precedes(other, constrained):
            ordering = ordering.add(other, constrained)

    constraint = constraint_for(collision, side)
    constraints = node.constraints | {constraint}
    path = constrained_shortest_path(
        instance.graph,
        instance.agents[constrained],
        [c for c in constraints if c.agent == constrained],
        _tie_context(node.plan, constrained, ordering, mode),
        instance.semantics,
        ctx,
    )
    if path is None:
        return None
    return _make_node(
        instance, constraints, node.plan.replace(constrained, path), ordering, generation_id
    )


class CBSSolver(BaseSolver):
    def __init__(
        self,
        mode: CBSMode = CBSMode.PLAIN,
        config: Optional[Config] = None,
        timeout: Optional[float] = None,
        budget: Optional[SearchBudget] = None,
    ):
        super().__init__(config, timeout, budget)
        self.mode = CBSMode(mode)
        self.name = "cbs" if self.mode is CBSMode.PLAIN else "cbswp"

    def _root(self, instance: Instance, ctx: SearchContext) -> Optional[CTNode]:
        paths: list[Path] = []
        for agent in instance.agents:
            path = constrained_shortest_path(
                instance.graph,
                agent,
                (),
                TieBreakContext(incomparable_paths=tuple(paths)),
                instance.semantics,
                ctx,
            )
            if path is None:
                return None
            paths.append(path)
        return _make_node(
            instance,
            frozenset(),
            Plan(tuple(paths)),
            PriorityOrdering.empty(instance.num_agents),
            0,
        )

    def _search(self, instance: Instance, ctx: SearchContext) -> SolveOutcome:
        stats = ctx.stats
        root = self._root(instance, ctx)
        if root is None:
            return SolveOutcome(SolveResult.NO_SOLUTION, stats)
        stats.high_level_generated += 1

        generation = 1
        open_list: list[tuple[tuple[int, int, int], CTNode]] = [(root.heap_key, root)]
        while open_list:
            ctx.deadline.check()
            _, node = heapq.heappop(open_list)
            stats.high_level_expansions += 1

            collision = choose_collision(node)
            if collision is None:
                return SolveOutcome(
                    SolveResult.SOLVED, stats, plan=node.plan, ordering=node.ordering
                )
            logger.debug(
                "CT node %d (cost %d): splitting on %s collision between %d and %d at t=%d",
                node.generation_id,
                node.cost,
                collision.kind.value,
                collision.agents[0] + 1,
                collision.agents[1] + 1,
                collision.time,
            )
            for side in (0, 1):
                child = expand_ct_node(
                    node, collision, side, self.mode, instance, ctx, generation
                )
                if child is None:
                    continue
                generation += 1
                stats.high_level_generated += 1
                heapq.heappush(open_list, (child.heap_key, child))

        return SolveOutcome(SolveResult.NO_SOLUTION, stats)


def solve_cbs(
    instance: Instance,
    mode: CBSMode = CBSMode.PLAIN,
    timeout: Optional[float] = None,
    budget: Optional[SearchBudget] = None,
    config: Optional[Config] = None,
) -> SolveOutcome:
    return CBSSolver(mode, config=config, timeout=timeout, budget=budget).solve(instance)
