"""Brute-force sequential prioritized planning over every total ordering."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from ..config import Config, get_config
from ..core.instance import Instance
from ..core.ordering import PriorityOrdering
from ..core.stats import SolveResult
from ..exceptions import RefusedTooLargeError
from ..solvers.pbs import solve_pbs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderingOutcome:
    """Result of planning with one total ordering, ``order`` highest first."""

    order: tuple[int, ...]
    result: SolveResult
    flowtime: Optional[int] = None

    @property
    def solved(self) -> bool:
        return self.result is SolveResult.SOLVED


def enumerate_total_orderings(
    instance: Instance,
    max_m: Optional[int] = None,
    timeout: Optional[float] = None,
    config: Optional[Config] = None,
) -> list[OrderingOutcome]:
    """Plan once per permutation of the agents (lexicographic order).

    Solvability is reported under the planner's own tie-breaking, which may
    differ from abstract solvability with some other choice of shortest paths.
    """
    config = config or get_config()
    limit = config.max_enumeration_agents if max_m is None else max_m
    if instance.num_agents > limit:
        raise RefusedTooLargeError(instance.num_agents, limit)

    outcomes: list[OrderingOutcome] = []
    for order in itertools.permutations(range(instance.num_agents)):
        outcome = solve_pbs(
            instance, PriorityOrdering.total(order), timeout=timeout, config=config
        )
        outcomes.append(OrderingOutcome(tuple(order), outcome.result, outcome.flowtime))
    logger.info(
        "%d of %d total orderings solve %s",
        sum(o.solved for o in outcomes),
        len(outcomes),
        instance.name or "<unnamed>",
    )
    return outcomes
