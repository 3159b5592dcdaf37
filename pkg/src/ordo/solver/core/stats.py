"""Solver outcomes, statistics sinks and wall-clock deadlines."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..exceptions import SolverTimeoutError
from .collisions import flowtime, makespan
from .instance import Plan
from .ordering import PriorityOrdering


class SolveResult(str, Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no_solution"
    TIMEOUT = "timeout"


@dataclass
class SolverStats:
    """Mutable counters filled in by one solver run."""

    runtime: float = 0.0
    high_level_expansions: int = 0
    high_level_generated: int = 0
    low_level_expansions: int = 0
    low_level_searches: int = 0
    max_branch_length: int = 0
    result: Optional[SolveResult] = None

    def merge(self, other: SolverStats) -> None:
        self.runtime += other.runtime
        self.high_level_expansions += other.high_level_expansions
        self.high_level_generated += other.high_level_generated
        self.low_level_expansions += other.low_level_expansions
        self.low_level_searches += other.low_level_searches
        self.max_branch_length = max(self.max_branch_length, other.max_branch_length)


@dataclass
class SolveOutcome:
    result: SolveResult
    stats: SolverStats
    plan: Optional[Plan] = None
    ordering: Optional[PriorityOrdering] = None
    branch_pairs: tuple[tuple[int, int], ...] = ()
    runs: list[SolveOutcome] = field(default_factory=list)

    @property
    def solved(self) -> bool:
        return self.result is SolveResult.SOLVED

    @property
    def flowtime(self) -> Optional[int]:
        return flowtime(self.plan) if self.plan is not None else None

    @property
    def makespan(self) -> Optional[int]:
        return makespan(self.plan) if self.plan is not None else None


@dataclass
class Deadline:
    """Wall-clock limit measured from construction."""

    limit: float

    def __post_init__(self) -> None:
        self.start_time = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start_time

    @property
    def is_expired(self) -> bool:
        return self.elapsed > self.limit

    def check(self) -> None:
        elapsed = self.elapsed
        if elapsed > self.limit:
            raise SolverTimeoutError(elapsed, self.limit)

    @classmethod
    def unlimited(cls) -> Deadline:
        return cls(float("inf"))
