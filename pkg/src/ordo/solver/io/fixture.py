"""Line-oriented explicit-graph fixtures.

::

    # two agents on a corridor with a side pocket
    semantics stay
    v (1,2)
    v (2,2)
    e (1,2) (2,2)
    a (1,2) (2,2)

``v`` declares a vertex label, ``e`` an undirected edge between two declared
labels, ``a`` an agent as a (start, target) label pair; agents are numbered in
file order. Labels may not contain whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core.graph import Graph
from ..core.instance import Instance, Semantics
from ..exceptions import FixtureFormatError

_ARITY = {"v": 1, "e": 2, "a": 2, "semantics": 1}


@dataclass
class GraphFixture:
    labels: list[str] = field(default_factory=list)
    edges: list[tuple[str, str]] = field(default_factory=list)
    agents: list[tuple[str, str]] = field(default_factory=list)
    semantics: Semantics = Semantics.STAY

    def to_instance(self, name: str = "") -> Instance:
        index = {label: i for i, label in enumerate(self.labels)}
        graph = Graph.from_edges(
            len(self.labels),
            [(index[u], index[v]) for u, v in self.edges],
            labels=self.labels,
        )
        return Instance.from_endpoints(
            graph,
            [(index[s], index[t]) for s, t in self.agents],
            self.semantics,
            name=name,
        )

    @classmethod
    def from_instance(cls, instance: Instance) -> GraphFixture:
        graph = instance.graph
        return cls(
            labels=list(graph.labels),
            edges=[(graph.label(u), graph.label(v)) for u, v in sorted(graph.edges)],
            agents=[
                (graph.label(a.start), graph.label(a.target)) for a in instance.agents
            ],
            semantics=instance.semantics,
        )


def read_graph_fixture(text: str) -> GraphFixture:
    fixture = GraphFixture()
    declared: set[str] = set()

    def known(label: str, number: int) -> str:
        if label not in declared:
            raise FixtureFormatError(f"Undeclared vertex label {label!r}", line=number)
        return label

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        arity = _ARITY.get(keyword)
        if arity is None:
            raise FixtureFormatError(f"Unknown directive {keyword!r}", line=number)
        if len(args) != arity:
            raise FixtureFormatError(
                f"'{keyword}' takes {arity} argument(s), got {len(args)}", line=number
            )

        if keyword == "v":
            if args[0] in declared:
                raise FixtureFormatError(f"Duplicate vertex {args[0]!r}", line=number)
            declared.add(args[0])
            fixture.labels.append(args[0])
        elif keyword == "e":
            fixture.edges.append((known(args[0], number), known(args[1], number)))
        elif keyword == "a":
            fixture.agents.append((known(args[0], number), known(args[1], number)))
        else:
            try:
                fixture.semantics = Semantics(args[0])
            except ValueError:
                raise FixtureFormatError(
                    f"Semantics must be 'stay' or 'disappear', got {args[0]!r}",
                    line=number,
                ) from None
    return fixture


def parse_graph_fixture(text: str, name: str = "") -> Instance:
    return read_graph_fixture(text).to_instance(name)


def serialize_graph_fixture(instance: Instance) -> str:
    fixture = GraphFixture.from_instance(instance)
    lines = [f"semantics {fixture.semantics.value}"]
    lines += [f"v {label}" for label in fixture.labels]
    lines += [f"e {u} {v}" for u, v in fixture.edges]
    lines += [f"a {s} {t}" for s, t in fixture.agents]
    return "\n".join(lines) + "\n"
