"""Strict partial orders over agent indices (``i`` precedes ``j``: i has higher priority)."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from ..exceptions import CycleError


@dataclass(frozen=True, eq=False)
class PriorityOrdering:
    """Immutable priority ordering with an M x M reachability matrix.

    ``reach[i, j]`` is True iff i precedes j under transitive closure. Adding a
    pair returns a new ordering; the closure is updated incrementally.
    """

    num_agents: int
    pairs: frozenset[tuple[int, int]] = frozenset()
    reach: NDArray[np.bool_] = field(default=None, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.reach is None:
            closure = np.zeros((self.num_agents, self.num_agents), dtype=np.bool_)
            object.__setattr__(self, "reach", closure)
            pending = self.pairs
            object.__setattr__(self, "pairs", frozenset())
            built = self
            for lo, hi in sorted(pending):
                built = built.add(lo, hi)
            object.__setattr__(self, "pairs", built.pairs)
            object.__setattr__(self, "reach", built.reach)
        self.reach.setflags(write=False)

    @classmethod
    def empty(cls, num_agents: int) -> PriorityOrdering:
        return cls(num_agents)

    @classmethod
    def from_pairs(
        cls, num_agents: int, pairs: Iterable[tuple[int, int]]
    ) -> PriorityOrdering:
        return cls(num_agents, frozenset(pairs))

    @classmethod
    def total(cls, order: Iterable[int]) -> PriorityOrdering:
        """Total order from a permutation, highest priority first."""
        order = list(order)
        ordering = cls(len(order))
        for hi_priority, lo_priority in zip(order, order[1:]):
            ordering = ordering.add(hi_priority, lo_priority)
        return ordering

    def precedes(self, i: int, j: int) -> bool:
        return bool(self.reach[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.reach[i, j] or self.reach[j, i])

    def add(self, lo: int, hi: int) -> PriorityOrdering:
        """New ordering that additionally has ``lo`` precede ``hi``."""
        if lo == hi:
            raise ValueError(f"An agent cannot precede itself ({lo})")
        if self.reach[hi, lo]:
            raise CycleError(lo, hi)
        if self.reach[lo, hi]:
            return PriorityOrdering(
                self.num_agents, self.pairs | {(lo, hi)}, self.reach
            )
        ancestors = self.reach[:, lo].copy()
        ancestors[lo] = True
        descendants = self.reach[hi, :].copy()
        descendants[hi] = True
        closure = self.reach | np.outer(ancestors, descendants)
        return PriorityOrdering(self.num_agents, self.pairs | {(lo, hi)}, closure)

    def higher_than(self, j: int) -> list[int]:
        """Agents that precede ``j``."""
        return np.flatnonzero(self.reach[:, j]).tolist()

    def lower_than(self, i: int) -> list[int]:
        """Agents that ``i`` precedes."""
        return np.flatnonzero(self.reach[i, :]).tolist()

    def incomparable_with(self, i: int) -> list[int]:
        related = self.reach[:, i] | self.reach[i, :]
        return [k for k in range(self.num_agents) if k != i and not related[k]]

    def extends(self, other: PriorityOrdering) -> bool:
        return not bool(np.any(other.reach & ~self.reach))

    def topo_below(self, i: int) -> list[int]:
        """``i`` followed by every agent it precedes, in a topological order that
        breaks ties by ascending index."""
        return self._topological({i, *self.lower_than(i)})

    def topological_order(self) -> list[int]:
        """Every agent, highest priority first; ties broken by ascending index."""
        return self._topological(set(range(self.num_agents)))

    def _topological(self, members: set[int]) -> list[int]:
        dag = nx.DiGraph()
        dag.add_nodes_from(members)
        dag.add_edges_from(
            (a, b) for a, b in self.pairs if a in members and b in members
        )
        return list(nx.lexicographical_topological_sort(dag))

    @property
    def closure_size(self) -> int:
        return int(self.reach.sum())

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return self.precedes(*pair)

    def __repr__(self) -> str:
        shown = ", ".join(f"{a + 1}<{b + 1}" for a, b in sorted(self.pairs))
        return f"PriorityOrdering({{{shown}}})"


def ordering_add(ordering: PriorityOrdering, lo: int, hi: int) -> PriorityOrdering:
    return ordering.add(lo, hi)


def precedes(ordering: PriorityOrdering, i: int, j: int) -> bool:
    return ordering.precedes(i, j)


def extends(a: PriorityOrdering, b: PriorityOrdering) -> bool:
    """True iff ``a`` keeps every ordered pair of ``b``."""
    return a.extends(b)


def topo_below(ordering: PriorityOrdering, i: int) -> list[int]:
    return ordering.topo_below(i)
