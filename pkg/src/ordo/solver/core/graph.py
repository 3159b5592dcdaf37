"""Environment graphs: explicit undirected graphs and four-neighbor grid maps."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from ..exceptions import DisconnectedMapError, InvalidInstanceError

logger = logging.getLogger(__name__)

Cell = tuple[int, int]
"""Grid coordinate (x: column, y: row), origin top-left."""

UNREACHABLE = -1


@dataclass(frozen=True)
class GridMap:
    """Rectangular four-neighbor grid with a set of blocked cells."""

    width: int
    height: int
    blocked: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise InvalidInstanceError(
                f"Grid dimensions must be positive, got {self.width}x{self.height}",
                field="dimensions",
            )
        object.__setattr__(self, "blocked", frozenset(self.blocked))

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def is_free(self, cell: Cell) -> bool:
        return self.in_bounds(cell) and cell not in self.blocked

    def free_cells(self) -> Iterator[Cell]:
        """Unblocked cells in row-major order (the vertex numbering order)."""
        for y in range(self.height):
            for x in range(self.width):
                if (x, y) not in self.blocked:
                    yield (x, y)

    @property
    def passable(self) -> NDArray[np.bool_]:
        """Boolean array indexed ``[y, x]``; True where the cell is unblocked."""
        grid = np.ones((self.height, self.width), dtype=np.bool_)
        for x, y in self.blocked:
            grid[y, x] = False
        return grid


@dataclass(frozen=True, eq=False)
class Graph:
    """Connected undirected graph over dense vertex ids ``0..vertex_count-1``.

    Edges are stored once as ``(min, max)`` pairs. Every vertex carries a text
    label used by the fixture, scenario and solution formats; grid-derived
    graphs also carry the cell coordinate of each vertex.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = ()
    coords: Optional[tuple[Cell, ...]] = None
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _label_index: dict[str, int] = field(init=False, repr=False)
    _coord_index: dict[Cell, int] = field(init=False, repr=False)
    _distance_cache: dict[int, tuple[int, ...]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.vertex_count <= 0:
            raise DisconnectedMapError("Graph has no vertices", components=0)

        canonical: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInstanceError(f"Self-loop on vertex {u}", field="edges")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInstanceError(
                    f"Edge ({u}, {v}) references an unknown vertex", field="edges"
                )
            canonical.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canonical))

        labels = self.labels or tuple(str(v) for v in range(self.vertex_count))
        if len(labels) != self.vertex_count:
            raise InvalidInstanceError(
                f"Expected {self.vertex_count} labels, got {len(labels)}",
                field="labels",
            )
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "_label_index", {name: i for i, name in enumerate(labels)})
        if len(self._label_index) != self.vertex_count:
            raise InvalidInstanceError("Vertex labels must be unique", field="labels")

        coord_index = {c: i for i, c in enumerate(self.coords or ())}
        object.__setattr__(self, "_coord_index", coord_index)

        neighbors: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in canonical:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(n)) for n in neighbors)
        )
        object.__setattr__(self, "_distance_cache", {})

        components = nx.number_connected_components(self.to_networkx())
        if components != 1:
            raise DisconnectedMapError(
                f"Graph has {components} connected components", components=components
            )

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Iterable[str]] = None,
    ) -> Graph:
        return cls(
            vertex_count=vertex_count,
            edges=frozenset(edges),
            labels=tuple(labels) if labels is not None else (),
        )

    def __len__(self) -> int:
        return self.vertex_count

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def vertex_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InvalidInstanceError(f"Unknown vertex label: {label}") from None

    def vertex_at(self, cell: Cell) -> int:
        try:
            return self._coord_index[cell]
        except KeyError:
            raise InvalidInstanceError(f"No vertex at cell {cell}") from None

    def label(self, v: int) -> str:
        return self.labels[v]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def distances_to(
        self, target: int, blocked: Optional[frozenset[int]] = None
    ) -> tuple[int, ...]:
        """Breadth-first hop distance from every vertex to ``target``.

        Vertices in ``blocked`` are removed from the graph first; unreachable
        vertices get ``UNREACHABLE``. Results without blocked vertices are cached.
        """
        if not blocked:
            cached = self._distance_cache.get(target)
            if cached is not None:
                return cached
        dist = [UNREACHABLE] * self.vertex_count
        if blocked and target in blocked:
            return tuple(dist)
        dist[target] = 0
        queue = deque([target])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] == UNREACHABLE and not (blocked and w in blocked):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        result = tuple(dist)
        if not blocked:
            self._distance_cache[target] = result
        return result


def build_graph_from_grid(grid: GridMap) -> Graph:
    """One vertex per unblocked cell, edges between unblocked 4-neighbors."""
    cells = list(grid.free_cells())
    if not cells:
        raise DisconnectedMapError("Map has no unblocked cells", components=0)
    index = {cell: i for i, cell in enumerate(cells)}
    edges = set()
    for (x, y), v in index.items():
        for nxt in ((x + 1, y), (x, y + 1)):
            w = index.get(nxt)
            if w is not None:
                edges.add((v, w))
    logger.debug(
        "Built grid graph %dx%d: %d vertices, %d edges",
        grid.width,
        grid.height,
        len(cells),
        len(edges),
    )
    return Graph(
        vertex_count=len(cells),
        edges=frozenset(edges),
        labels=tuple(f"({x},{y})" for x, y in cells),
        coords=tuple(cells),
    )
