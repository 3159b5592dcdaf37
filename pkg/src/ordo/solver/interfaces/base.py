import logging
import time
from abc import ABC, abstractmethod
from typing import Optional

from ..config import Config
from ..core.instance import Instance
from ..core.stats import Deadline, SolveOutcome, SolveResult, SolverStats
from ..exceptions import SolverTimeoutError
from ..search.lowlevel import SearchBudget, SearchContext

logger = logging.getLogger(__name__)


class BaseSolver(ABC):
    """Common plumbing for every high-level solver.

    Subclasses implement ``_search``; ``solve`` wraps it with the wall-clock
    deadline, the statistics sink and the timeout conversion.
    """

    name = "base"

    def __init__(
        self,
        config: Optional[Config] = None,
        timeout: Optional[float] = None,
        budget: Optional[SearchBudget] = None,
    ):
        from ..config import get_config

        self.config = config or get_config()
        self.timeout = self.config.timeout if timeout is None else timeout
        self.budget = budget or SearchBudget(
            node_expansion_limit=self.config.node_expansion_limit
        )

    def solve(self, instance: Instance) -> SolveOutcome:
        ctx = self._new_context()
        started = time.perf_counter()
        logger.info(
            "%s: solving %s (%d agents, %d vertices, %s)",
            self.name,
            instance.name or "<unnamed>",
            instance.num_agents,
            instance.graph.vertex_count,
            instance.semantics.value,
        )
        try:
            outcome = self._search(instance, ctx)
        except SolverTimeoutError as e:
            logger.info("%s: %s", self.name, e)
            outcome = SolveOutcome(SolveResult.TIMEOUT, ctx.stats)
        outcome.stats.runtime = time.perf_counter() - started
        outcome.stats.result = outcome.result
        logger.info(
            "%s: %s in %.3fs (hl=%d, ll=%d, flowtime=%s)",
            self.name,
            outcome.result.value,
            outcome.stats.runtime,
            outcome.stats.high_level_expansions,
            outcome.stats.low_level_expansions,
            outcome.flowtime,
        )
        return outcome

    @abstractmethod
    def _search(self, instance: Instance, ctx: SearchContext) -> SolveOutcome:
        pass

    def _new_context(self) -> SearchContext:
        return SearchContext(
            stats=SolverStats(),
            deadline=Deadline(self.timeout),
            budget=self.budget,
            check_interval=self.config.deadline_check_interval,
        )
