"""Agents, instances, paths and plans."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..exceptions import DuplicateEndpointError, InvalidInstanceError
from .graph import Graph


class Semantics(str, Enum):
    """What happens to an agent once it has arrived at its target."""

    STAY = "stay"
    DISAPPEAR = "disappear"


@dataclass(frozen=True)
class Agent:
    index: int
    start: int
    target: int


@dataclass(frozen=True, eq=False)
class Instance:
    graph: Graph
    agents: tuple[Agent, ...]
    semantics: Semantics = Semantics.STAY
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        starts: dict[int, int] = {}
        targets: dict[int, int] = {}
        for position, agent in enumerate(self.agents):
            if agent.index != position:
                raise InvalidInstanceError(
                    f"Agent at position {position} has index {agent.index}",
                    field="agents",
                )
            for vertex in (agent.start, agent.target):
                if not 0 <= vertex < self.graph.vertex_count:
                    raise InvalidInstanceError(
                        f"Agent {agent.index} references unknown vertex {vertex}",
                        field="agents",
                    )
            if agent.start in starts:
                raise DuplicateEndpointError(
                    f"Agents {starts[agent.start]} and {agent.index} share a start",
                    vertex=self.graph.label(agent.start),
                )
            if agent.target in targets:
                raise DuplicateEndpointError(
                    f"Agents {targets[agent.target]} and {agent.index} share a target",
                    vertex=self.graph.label(agent.target),
                )
            starts[agent.start] = agent.index
            targets[agent.target] = agent.index

    @classmethod
    def from_endpoints(
        cls,
        graph: Graph,
        endpoints: Sequence[tuple[int, int]],
        semantics: Semantics = Semantics.STAY,
        name: str = "",
    ) -> Instance:
        agents = tuple(Agent(i, s, t) for i, (s, t) in enumerate(endpoints))
        return cls(graph=graph, agents=agents, semantics=semantics, name=name)

    @property
    def num_agents(self) -> int:
        return len(self.agents)

    def with_semantics(self, semantics: Semantics) -> Instance:
        return Instance(self.graph, self.agents, Semantics(semantics), self.name)


@dataclass(frozen=True)
class Path:
    """Time-indexed vertex sequence; ``vertices[t]`` is the position at step t."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise InvalidInstanceError("A path needs at least one vertex")

    @property
    def arrival(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, t: int) -> int:
        return self.vertices[t]

    def position(self, t: int, semantics: Semantics) -> Optional[int]:
        """Vertex occupied at time ``t``, or None once the agent has vanished."""
        if t <= self.arrival:
            return self.vertices[t]
        if semantics is Semantics.STAY:
            return self.vertices[-1]
        return None

    def normalized(self) -> Path:
        """Drop trailing waits at the final vertex (the stored arrival convention)."""
        end = len(self.vertices)
        while end > 1 and self.vertices[end - 2] == self.vertices[-1]:
            end -= 1
        return Path(self.vertices[:end])


@dataclass(frozen=True)
class Plan:
    """One path per agent, indexed by agent index."""

    paths: tuple[Path, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __getitem__(self, index: int) -> Path:
        return self.paths[index]

    def replace(self, index: int, path: Path) -> Plan:
        paths = list(self.paths)
        paths[index] = path
        return Plan(tuple(paths))

    @property
    def arrivals(self) -> tuple[int, ...]:
        return tuple(p.arrival for p in self.paths)
