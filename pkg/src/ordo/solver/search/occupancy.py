"""Space-time occupancy index over a set of other agents' paths."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

from ..core.instance import Path, Semantics

NEVER = -1
FOREVER = float("inf")


class PathTable:
    """Who is where, and when, for a fixed set of paths.

    Under ``Semantics.STAY`` an agent keeps occupying its final vertex at every
    time after its arrival ("parked"); under ``Semantics.DISAPPEAR`` it
    occupies nothing after its arrival step.
    """

    def __init__(
        self,
        paths: Sequence[Path],
        semantics: Semantics,
        ids: Optional[Sequence[int]] = None,
    ):
        self.semantics = semantics
        self.ids = list(ids) if ids is not None else list(range(len(paths)))
        self.cells: dict[tuple[int, int], list[int]] = {}
        self.moves: dict[tuple[int, int, int], list[int]] = {}
        self.visits: dict[int, list[tuple[int, int]]] = {}
        self.parked: dict[int, tuple[int, int]] = {}
        self.horizon = 0

        for agent_id, path in zip(self.ids, paths):
            self.horizon = max(self.horizon, path.arrival)
            previous = None
            for t, v in enumerate(path.vertices):
                self.cells.setdefault((v, t), []).append(agent_id)
                self.visits.setdefault(v, []).append((t, agent_id))
                if previous is not None and previous != v:
                    self.moves.setdefault((previous, v, t), []).append(agent_id)
                previous = v
            if semantics is Semantics.STAY:
                self.parked[path.end] = (path.arrival + 1, agent_id)

    def __len__(self) -> int:
        return len(self.ids)

    @property
    def parked_vertices(self) -> frozenset[int]:
        return frozenset(self.parked)

    def vertex_agents(self, v: int, t: int) -> list[int]:
        found = self.cells.get((v, t), [])
        parked = self.parked.get(v)
        if parked is not None and t >= parked[0]:
            return [*found, parked[1]]
        return found

    def edge_agents(self, u: int, v: int, t: int) -> list[int]:
        """Agents moving v->u arriving at t (the swap partners of a u->v move)."""
        return self.moves.get((v, u, t), [])

    def step_hits(self, u: int, v: int, t: int) -> int:
        """Collision events caused by moving u->v (or waiting when u == v) into t."""
        hits = len(self.vertex_agents(v, t))
        if u != v:
            hits += len(self.edge_agents(u, v, t))
        return hits

    def is_free(self, u: int, v: int, t: int) -> bool:
        return self.step_hits(u, v, t) == 0

    def last_occupied(self, v: int) -> float:
        """Latest time at which some path occupies ``v`` (FOREVER when parked)."""
        if v in self.parked:
            return FOREVER
        return max((t for t, _ in self.visits.get(v, ())), default=NEVER)

    def colliding_agents(self, path: Path) -> set[int]:
        """Ids of the paths in this table that collide with ``path`` at least once."""
        hit: set[int] = set()
        previous = None
        for t, v in enumerate(path.vertices):
            hit.update(self.vertex_agents(v, t))
            if previous is not None and previous != v:
                hit.update(self.edge_agents(previous, v, t))
            previous = v
        if self.semantics is Semantics.STAY:
            final, arrival = path.end, path.arrival
            hit.update(a for t, a in self.visits.get(final, ()) if t > arrival)
            parked = self.parked.get(final)
            if parked is not None:
                hit.add(parked[1])
        return hit
