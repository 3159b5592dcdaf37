"""Priority-Based Search and the fixed-ordering baselines built on it.

PBS explores priority orderings depth-first. Every node holds a plan in which
no two agents ordered by the node's ordering collide; a collision between two
incomparable agents i and j is resolved by branching on ``j before i`` and
``i before j`` and replanning the lower agent together with everything below
it. With a total initial ordering the root already fixes every pair, so the
search reduces to standard sequential prioritized planning (FIX, LH, SH, RND).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..config import Config
from ..core.collisions import first_collision
from ..core.instance import Instance, Path, Plan
from ..core.ordering import PriorityOrdering
from ..core.stats import SolveOutcome, SolveResult, SolverStats
from ..interfaces.base import BaseSolver
from ..search.lowlevel import (
    SearchBudget,
    SearchContext,
    TieBreakContext,
    individually_optimal_path,
    prioritized_shortest_path,
)
from ..search.occupancy import PathTable

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class PTNode:
    """Priority-tree node; ``paths[k]`` is None only while the root is being built."""

    paths: list[Optional[Path]]
    ordering: PriorityOrdering
    branch_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def plan(self) -> Plan:
        missing = [k for k, p in enumerate(self.paths) if p is None]
        if missing:
            raise ValueError(f"Agents {missing} have no path yet")
        return Plan(tuple(self.paths))  # type: ignore[arg-type]

    @property
    def cost(self) -> int:
        return sum(p.arrival for p in self.paths if p is not None)

    @property
    def depth(self) -> int:
        return len(self.branch_pairs)

    def branch(self, lo: int, hi: int) -> PTNode:
        """Copy of this node with ``lo`` additionally preceding ``hi``."""
        return PTNode(
            paths=list(self.paths),
            ordering=self.ordering.add(lo, hi),
            branch_pairs=(*self.branch_pairs, (lo, hi)),
        )


def _planned(node: PTNode, agents: list[int]) -> tuple[Path, ...]:
    return tuple(p for p in (node.paths[k] for k in agents) if p is not None)


def update_plan(
    node: PTNode,
    agent_index: int,
    instance: Instance,
    ctx: Optional[SearchContext] = None,
) -> bool:
    """Replan ``agent_index`` and, in topological order, every lower agent whose
    path collides with a higher one or one of whose superiors got a new path.
    Returns False when a replan fails.

    Agents without a path yet are neither obstacles nor replanned, except for
    ``agent_index`` itself.
    """
    ordering = node.ordering
    semantics = instance.semantics
    changed: set[int] = set()
    for j in ordering.topo_below(agent_index):
        current = node.paths[j]
        if j != agent_index and current is None:
            continue
        superiors = ordering.higher_than(j)
        higher_paths = _planned(node, superiors)
        if j != agent_index:
            assert current is not None
            # kept only while the superior paths it was planned against stand
            if changed.isdisjoint(superiors) and not PathTable(
                higher_paths, semantics
            ).colliding_agents(current):
                continue

        tie_ctx = TieBreakContext(
            incomparable_paths=_planned(node, ordering.incomparable_with(j)),
            lower_paths=_planned(node, ordering.lower_than(j)),
        )
        path = prioritized_shortest_path(
            instance.graph, instance.agents[j], higher_paths, semantics, tie_ctx, ctx
        )
        if path is None:
            logger.debug("UpdatePlan(%d): agent %d has no path", agent_index + 1, j + 1)
            return False
        if path != current:
            changed.add(j)
        node.paths[j] = path
    return True


class PBSSolver(BaseSolver):
    name = "pbs"

    def __init__(
        self,
        initial_ordering: Optional[PriorityOrdering] = None,
        config: Optional[Config] = None,
        timeout: Optional[float] = None,
        budget: Optional[SearchBudget] = None,
    ):
        super().__init__(config, timeout, budget)
        self.initial_ordering = initial_ordering

    def _search(self, instance: Instance, ctx: SearchContext) -> SolveOutcome:
        stats = ctx.stats
        m = instance.num_agents
        ordering = self.initial_ordering or PriorityOrdering.empty(m)
        if ordering.num_agents != m:
            raise ValueError(
                f"Initial ordering covers {ordering.num_agents} agents, instance has {m}"
            )

        root = PTNode(paths=[None] * m, ordering=ordering)
        for i in ordering.topological_order():
            if not update_plan(root, i, instance, ctx):
                logger.debug("Root construction failed at agent %d", i + 1)
                return SolveOutcome(SolveResult.NO_SOLUTION, stats, ordering=ordering)
        stats.high_level_generated += 1

        max_depth = m * (m - 1) // 2
        stack = [root]
        while stack:
            ctx.deadline.check()
            node = stack.pop()
            stats.high_level_expansions += 1
            assert node.depth <= max_depth, "priority tree branch exceeds pair bound"
            stats.max_branch_length = max(stats.max_branch_length, node.depth)

            plan = node.plan
            collision = first_collision(instance, plan)
            if collision is None:
                return SolveOutcome(
                    SolveResult.SOLVED,
                    stats,
                    plan=plan,
                    ordering=node.ordering,
                    branch_pairs=node.branch_pairs,
                )

            i, j = collision.agents
            assert not node.ordering.comparable(i, j)
            logger.debug(
                "PT node depth %d (cost %d): branching on agents %d and %d at t=%d",
                node.depth,
                node.cost,
                i + 1,
                j + 1,
                collision.time,
            )
            children: list[tuple[int, int, PTNode]] = []
            for rank, (lo, hi) in enumerate(((j, i), (i, j))):
                child = node.branch(lo, hi)
                if update_plan(child, hi, instance, ctx):
                    stats.high_level_generated += 1
                    children.append((child.cost, rank, child))

            # smaller cost popped first; the (j before i) child wins ties
            for _, _, child in sorted(children, key=lambda c: c[:2], reverse=True):
                stack.append(child)

        return SolveOutcome(SolveResult.NO_SOLUTION, stats, ordering=ordering)


def solve_pbs(
    instance: Instance,
    initial_ordering: Optional[PriorityOrdering] = None,
    timeout: Optional[float] = None,
    budget: Optional[SearchBudget] = None,
    config: Optional[Config] = None,
) -> SolveOutcome:
    return PBSSolver(
        initial_ordering, config=config, timeout=timeout, budget=budget
    ).solve(instance)


class StrategyKind(str, Enum):
    FIXED = "fixed"
    LONGEST_FIRST = "longest_first"
    SHORTEST_FIRST = "shortest_first"
    RANDOM_SEEDED = "random_seeded"


@dataclass(frozen=True)
class OrderingStrategy:
    kind: StrategyKind
    order: Optional[tuple[int, ...]] = None
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is StrategyKind.FIXED and self.order is None:
            raise ValueError("A fixed strategy needs an order")
        if self.kind is StrategyKind.RANDOM_SEEDED and self.seed is None:
            raise ValueError("A random strategy needs a seed")

    @classmethod
    def fixed(cls, order: Sequence[int]) -> OrderingStrategy:
        return cls(StrategyKind.FIXED, order=tuple(order))

    @classmethod
    def longest_first(cls) -> OrderingStrategy:
        return cls(StrategyKind.LONGEST_FIRST)

    @classmethod
    def shortest_first(cls) -> OrderingStrategy:
        return cls(StrategyKind.SHORTEST_FIRST)

    @classmethod
    def random_seeded(cls, seed: int) -> OrderingStrategy:
        return cls(StrategyKind.RANDOM_SEEDED, seed=seed)


def build_total_ordering(
    instance: Instance, strategy: OrderingStrategy
) -> PriorityOrdering:
    """Total ordering for a strategy, highest priority first; ties by index."""
    m = instance.num_agents
    if strategy.kind is StrategyKind.FIXED:
        order = list(strategy.order or ())
        if sorted(order) != list(range(m)):
            raise ValueError(f"Fixed order {order} is not a permutation of {m} agents")
    elif strategy.kind is StrategyKind.RANDOM_SEEDED:
        rng = np.random.default_rng(strategy.seed)
        order = rng.permutation(m).tolist()
    else:
        lengths = [
            individually_optimal_path(instance.graph, a).arrival for a in instance.agents
        ]
        sign = -1 if strategy.kind is StrategyKind.LONGEST_FIRST else 1
        order = sorted(range(m), key=lambda a: (sign * lengths[a], a))
    return PriorityOrdering.total(order)


def derive_run_seeds(seed: int, runs: int) -> list[int]:
    """Independent 64-bit seeds for ``runs`` sub-runs of one seeded experiment."""
    children = np.random.SeedSequence(seed).spawn(runs)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


class RNDSolver(BaseSolver):
    """PBS from ``runs`` random total orderings; keeps the cheapest solution.

    Each run gets its own full timeout; the returned statistics are the sums
    over all runs and the per-run outcomes are kept in ``SolveOutcome.runs``.
    """

    name = "rnd"

    def __init__(
        self,
        runs: int = 10,
        seed: int = 0,
        config: Optional[Config] = None,
        per_run_timeout: Optional[float] = None,
        budget: Optional[SearchBudget] = None,
    ):
        super().__init__(config, per_run_timeout, budget)
        if runs <= 0:
            raise ValueError("RND needs at least one run")
        self.runs = runs
        self.seed = seed

    def _search(self, instance: Instance, ctx: SearchContext) -> SolveOutcome:
        runs: list[SolveOutcome] = []
        total = SolverStats()
        for run_seed in derive_run_seeds(self.seed, self.runs):
            ordering = build_total_ordering(
                instance, OrderingStrategy.random_seeded(run_seed)
            )
            outcome = PBSSolver(
                ordering, config=self.config, timeout=self.timeout, budget=self.budget
            ).solve(instance)
            runs.append(outcome)
            total.merge(outcome.stats)

        best: Optional[SolveOutcome] = None
        for outcome in runs:
            if outcome.solved and (best is None or outcome.flowtime < best.flowtime):  # type: ignore[operator]
                best = outcome
        if best is not None:
            return SolveOutcome(
                SolveResult.SOLVED,
                total,
                plan=best.plan,
                ordering=best.ordering,
                runs=runs,
            )
        if all(o.result is SolveResult.TIMEOUT for o in runs):
            return SolveOutcome(SolveResult.TIMEOUT, total, runs=runs)
        return SolveOutcome(SolveResult.NO_SOLUTION, total, runs=runs)


def solve_rnd(
    instance: Instance,
    runs: int = 10,
    per_run_timeout: Optional[float] = None,
    seed: int = 0,
    budget: Optional[SearchBudget] = None,
    config: Optional[Config] = None,
) -> SolveOutcome:
    return RNDSolver(
        runs, seed, config=config, per_run_timeout=per_run_timeout, budget=budget
    ).solve(instance)
