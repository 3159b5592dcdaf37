"""Collision detection, constraints, objective metrics and solution validation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .instance import Instance, Path, Plan, Semantics


class CollisionKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


_KIND_RANK = {CollisionKind.VERTEX: 0, CollisionKind.EDGE: 1}


@dataclass(frozen=True)
class Collision:
    """Conflict between agents ``agents[0] < agents[1]`` at ``time``.

    A vertex collision carries ``(v,)``; an edge collision carries ``(u, v)``
    where the lower-index agent moves u->v while the other moves v->u.
    """

    kind: CollisionKind
    agents: tuple[int, int]
    vertices: tuple[int, ...]
    time: int

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.time, self.agents[0], self.agents[1], _KIND_RANK[self.kind])

    def involves(self, agent: int) -> bool:
        return agent in self.agents

    def other(self, agent: int) -> int:
        return self.agents[1] if agent == self.agents[0] else self.agents[0]


@dataclass(frozen=True)
class Constraint:
    """Prohibits ``agent`` from occupying ``vertices[0]`` at ``time`` (vertex)
    or from moving ``vertices[0] -> vertices[1]`` arriving at ``time`` (edge)."""

    agent: int
    kind: CollisionKind
    vertices: tuple[int, ...]
    time: int

    @classmethod
    def vertex(cls, agent: int, v: int, t: int) -> Constraint:
        return cls(agent, CollisionKind.VERTEX, (v,), t)

    @classmethod
    def edge(cls, agent: int, u: int, v: int, t: int) -> Constraint:
        return cls(agent, CollisionKind.EDGE, (u, v), t)


def constraint_for(collision: Collision, side: int) -> Constraint:
    """The constraint that resolves ``collision`` by restricting ``agents[side]``."""
    agent = collision.agents[side]
    if collision.kind is CollisionKind.VERTEX:
        return Constraint.vertex(agent, collision.vertices[0], collision.time)
    u, v = collision.vertices
    if side == 0:
        return Constraint.edge(agent, u, v, collision.time)
    return Constraint.edge(agent, v, u, collision.time)


def _horizon(paths: list[tuple[int, Path]]) -> int:
    return max((p.arrival for _, p in paths), default=0)


def _sweep(
    paths: list[tuple[int, Path]], semantics: Semantics, stop_at_first: bool
) -> list[Collision]:
    found: list[Collision] = []
    previous: dict[int, int] = {}
    for t in range(_horizon(paths) + 1):
        occupancy: dict[int, list[int]] = {}
        current: dict[int, int] = {}
        for agent, path in paths:
            v = path.position(t, semantics)
            if v is None:
                continue
            current[agent] = v
            occupancy.setdefault(v, []).append(agent)

        for v, agents in occupancy.items():
            if len(agents) > 1:
                for a, b in combinations(sorted(agents), 2):
                    found.append(Collision(CollisionKind.VERTEX, (a, b), (v,), t))

        if t > 0:
            moves: dict[tuple[int, int], list[int]] = {}
            for agent, v in current.items():
                u = previous.get(agent)
                if u is not None and u != v:
                    moves.setdefault((u, v), []).append(agent)
            for (u, v), movers in moves.items():
                for a in movers:
                    for b in moves.get((v, u), ()):
                        if a < b:
                            found.append(
                                Collision(CollisionKind.EDGE, (a, b), (u, v), t)
                            )

        if stop_at_first and found:
            break
        previous = current
    found.sort(key=lambda c: c.sort_key)
    return found


def detect_collisions(instance: Instance, plan: Plan) -> list[Collision]:
    """Every vertex and edge collision in ``plan``, sorted by
    (time, lower agent, higher agent, vertex before edge)."""
    return _sweep(list(enumerate(plan.paths)), instance.semantics, False)


def first_collision(instance: Instance, plan: Plan) -> Optional[Collision]:
    found = _sweep(list(enumerate(plan.paths)), instance.semantics, True)
    return found[0] if found else None


def pair_collisions(
    i: int, p: Path, j: int, q: Path, semantics: Semantics
) -> list[Collision]:
    """Collisions between two individual paths, reported with agent ids i and j."""
    return _sweep([(i, p), (j, q)], semantics, False)


def paths_collide(p: Path, q: Path, semantics: Semantics) -> bool:
    return bool(_sweep([(0, p), (1, q)], semantics, True))


def flowtime(plan: Plan) -> int:
    return sum(path.arrival for path in plan.paths)


def makespan(plan: Plan) -> int:
    return max((path.arrival for path in plan.paths), default=0)


class ViolationKind(str, Enum):
    MISSING_PATH = "missing_path"
    UNKNOWN_VERTEX = "unknown_vertex"
    WRONG_START = "wrong_start"
    WRONG_TARGET = "wrong_target"
    NOT_ADJACENT = "not_adjacent"
    EARLY_ARRIVAL = "early_arrival"
    VERTEX_COLLISION = "vertex_collision"
    EDGE_COLLISION = "edge_collision"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    agent: int
    time: Optional[int]
    message: str


def validate_solution(instance: Instance, plan: Plan) -> list[Violation]:
    """All path-invariant and collision violations; an empty list means valid."""
    violations: list[Violation] = []
    graph = instance.graph

    if len(plan) != instance.num_agents:
        violations.append(
            Violation(
                ViolationKind.MISSING_PATH,
                min(len(plan), instance.num_agents),
                None,
                f"Plan has {len(plan)} paths for {instance.num_agents} agents",
            )
        )
        return violations

    structurally_sound = True
    for agent, path in zip(instance.agents, plan.paths):
        i = agent.index
        bad = [v for v in path if not 0 <= v < graph.vertex_count]
        if bad:
            violations.append(
                Violation(
                    ViolationKind.UNKNOWN_VERTEX, i, None, f"Unknown vertex {bad[0]}"
                )
            )
            structurally_sound = False
            continue
        if path.start != agent.start:
            violations.append(
                Violation(
                    ViolationKind.WRONG_START,
                    i,
                    0,
                    f"Path starts at {graph.label(path.start)}, "
                    f"expected {graph.label(agent.start)}",
                )
            )
        if path.end != agent.target:
            violations.append(
                Violation(
                    ViolationKind.WRONG_TARGET,
                    i,
                    path.arrival,
                    f"Path ends at {graph.label(path.end)}, "
                    f"expected {graph.label(agent.target)}",
                )
            )
        for t in range(1, len(path)):
            u, v = path[t - 1], path[t]
            if u != v and not graph.has_edge(u, v):
                violations.append(
                    Violation(
                        ViolationKind.NOT_ADJACENT,
                        i,
                        t,
                        f"Step {graph.label(u)} -> {graph.label(v)} is not an edge",
                    )
                )
        if instance.semantics is Semantics.DISAPPEAR:
            early = [t for t in range(path.arrival) if path[t] == agent.target]
            if early:
                violations.append(
                    Violation(
                        ViolationKind.EARLY_ARRIVAL,
                        i,
                        early[0],
                        f"Target reached at t={early[0]} before the path ends",
                    )
                )

    if not structurally_sound:
        return violations

    for collision in detect_collisions(instance, plan):
        kind = (
            ViolationKind.VERTEX_COLLISION
            if collision.kind is CollisionKind.VERTEX
            else ViolationKind.EDGE_COLLISION
        )
        a, b = collision.agents
        where = ", ".join(graph.label(v) for v in collision.vertices)
        violations.append(
            Violation(
                kind,
                a,
                collision.time,
                f"Agents {a + 1} and {b + 1} collide at {where}, t={collision.time}",
            )
        )
    return violations


def is_valid_solution(instance: Instance, plan: Plan) -> bool:
    return not validate_solution(instance, plan)
