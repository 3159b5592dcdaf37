"""movingai ``.map`` and ``.scen`` (version 1) readers and writers."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from ..core.graph import Cell, Graph, GridMap, build_graph_from_grid
from ..core.instance import Instance, Semantics
from ..exceptions import (
    BadEntryError,
    DimensionMismatchError,
    DuplicateEndpointError,
    InvalidInstanceError,
    MalformedHeaderError,
)

logger = logging.getLogger(__name__)

PASSABLE = frozenset(".G")
SCEN_VERSION = "version 1"


def _header_value(lines: list[str], index: int, key: str) -> str:
    if index >= len(lines):
        raise MalformedHeaderError(f"Missing '{key}' line", line=index + 1)
    parts = lines[index].split()
    if len(parts) != 2 or parts[0] != key:
        raise MalformedHeaderError(
            f"Expected '{key} <value>', got {lines[index]!r}", line=index + 1
        )
    return parts[1]


def _header_int(lines: list[str], index: int, key: str) -> int:
    raw = _header_value(lines, index, key)
    try:
        value = int(raw)
    except ValueError:
        raise MalformedHeaderError(
            f"'{key}' must be an integer, got {raw!r}", line=index + 1
        ) from None
    if value <= 0:
        raise MalformedHeaderError(f"'{key}' must be positive", line=index + 1)
    return value


def parse_map(text: str) -> GridMap:
    """Parse a movingai map; '.' and 'G' are passable, everything else blocked."""
    lines = text.splitlines()
    _header_value(lines, 0, "type")
    height = _header_int(lines, 1, "height")
    width = _header_int(lines, 2, "width")
    if len(lines) < 4 or lines[3].strip() != "map":
        raise MalformedHeaderError("Expected 'map' line", line=4)

    rows = lines[4:]
    while rows and not rows[-1].strip():
        rows.pop()
    if len(rows) != height:
        raise DimensionMismatchError(
            f"Header declares {height} rows, body has {len(rows)}",
            expected=height,
            found=len(rows),
        )

    blocked: set[Cell] = set()
    for y, row in enumerate(rows):
        row = row.rstrip("\r")
        if len(row) != width:
            raise DimensionMismatchError(
                f"Row {y} has {len(row)} cells, header declares {width}",
                expected=width,
                found=len(row),
            )
        blocked.update((x, y) for x, ch in enumerate(row) if ch not in PASSABLE)
    return GridMap(width=width, height=height, blocked=frozenset(blocked))


def serialize_map(grid: GridMap) -> str:
    rows = [
        "".join("@" if (x, y) in grid.blocked else "." for x in range(grid.width))
        for y in range(grid.height)
    ]
    header = ["type octile", f"height {grid.height}", f"width {grid.width}", "map"]
    return "\n".join(header + rows) + "\n"


@dataclass(frozen=True)
class ScenarioEntry:
    bucket: int
    map_name: str
    width: int
    height: int
    start: Cell
    goal: Cell
    optimal_length: float = 0.0

    def to_line(self) -> str:
        return "\t".join(
            [
                str(self.bucket),
                self.map_name,
                str(self.width),
                str(self.height),
                str(self.start[0]),
                str(self.start[1]),
                str(self.goal[0]),
                str(self.goal[1]),
                repr(float(self.optimal_length)),
            ]
        )


def parse_scen_entries(text: str) -> list[ScenarioEntry]:
    lines = text.splitlines()
    if not lines or lines[0].strip().lower() != SCEN_VERSION:
        raise MalformedHeaderError(f"Expected '{SCEN_VERSION}' first line", line=1)

    entries: list[ScenarioEntry] = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 9:
            raise BadEntryError(
                f"Expected 9 tab-separated fields, got {len(fields)}", line=number
            )
        try:
            entries.append(
                ScenarioEntry(
                    bucket=int(fields[0]),
                    map_name=fields[1],
                    width=int(fields[2]),
                    height=int(fields[3]),
                    start=(int(fields[4]), int(fields[5])),
                    goal=(int(fields[6]), int(fields[7])),
                    optimal_length=float(fields[8]),
                )
            )
        except ValueError as e:
            raise BadEntryError(f"Invalid number in entry: {e}", line=number) from e
    return entries


def serialize_scen(entries: Sequence[ScenarioEntry]) -> str:
    return "\n".join([SCEN_VERSION, *(e.to_line() for e in entries)]) + "\n"


def parse_scen(
    text: str,
    grid: GridMap,
    m: int,
    semantics: Semantics = Semantics.STAY,
    graph: Optional[Graph] = None,
    name: str = "",
) -> Instance:
    """First ``m`` scenario entries as agents 0..m-1 on ``grid``.

    Entries beyond ``m`` are ignored. ``graph`` may be passed to reuse an
    already built grid graph.
    """
    entries = parse_scen_entries(text)
    if m < 0 or m > len(entries):
        raise BadEntryError(f"Requested {m} agents, scenario has {len(entries)} entries")
    graph = graph or build_graph_from_grid(grid)

    endpoints: list[tuple[int, int]] = []
    seen_starts: dict[Cell, int] = {}
    seen_goals: dict[Cell, int] = {}
    for i, entry in enumerate(entries[:m]):
        line = i + 2
        if (entry.width, entry.height) != (grid.width, grid.height):
            raise BadEntryError(
                f"Entry is for a {entry.width}x{entry.height} map, "
                f"map is {grid.width}x{grid.height}",
                line=line,
            )
        for cell in (entry.start, entry.goal):
            if not grid.is_free(cell):
                raise BadEntryError(f"Cell {cell} is out of bounds or blocked", line=line)
        if entry.start in seen_starts:
            raise DuplicateEndpointError(
                f"Agents {seen_starts[entry.start] + 1} and {i + 1} share a start",
                vertex=f"({entry.start[0]},{entry.start[1]})",
            )
        if entry.goal in seen_goals:
            raise DuplicateEndpointError(
                f"Agents {seen_goals[entry.goal] + 1} and {i + 1} share a target",
                vertex=f"({entry.goal[0]},{entry.goal[1]})",
            )
        seen_starts[entry.start] = i
        seen_goals[entry.goal] = i
        endpoints.append((graph.vertex_at(entry.start), graph.vertex_at(entry.goal)))

    logger.debug("Loaded %d of %d scenario entries", m, len(entries))
    return Instance.from_endpoints(graph, endpoints, semantics, name=name)


def scenario_entries(
    instance: Instance, map_name: str, grid: GridMap
) -> list[ScenarioEntry]:
    """Scenario entries describing a grid instance (bucket 0, optimal lengths unset)."""
    coords = instance.graph.coords
    if coords is None:
        raise InvalidInstanceError("Instance graph is not grid-derived", field="graph")
    return [
        ScenarioEntry(
            bucket=0,
            map_name=map_name,
            width=grid.width,
            height=grid.height,
            start=coords[agent.start],
            goal=coords[agent.target],
        )
        for agent in instance.agents
    ]
