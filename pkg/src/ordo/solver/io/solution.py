"""Solution files: one line per agent, ``agent <i>: v0 v1 ... vT`` (1-based i)."""

from __future__ import annotations

import re

from ..core.instance import Instance, Path, Plan
from ..exceptions import BadEntryError, InvalidInstanceError

_LINE = re.compile(r"^agent\s+(\d+)\s*:\s*(.*)$")


def format_solution(instance: Instance, plan: Plan) -> str:
    label = instance.graph.label
    lines = [
        f"agent {i + 1}: " + " ".join(label(v) for v in path)
        for i, path in enumerate(plan)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_solution(text: str, instance: Instance) -> Plan:
    """Read a solution file back into a plan over ``instance``'s vertex ids.

    Every agent of the instance needs exactly one line; lines may appear in any
    order.
    """
    paths: dict[int, Path] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _LINE.match(line)
        if match is None:
            raise BadEntryError(f"Expected 'agent <i>: ...', got {line!r}", line=number)
        agent = int(match.group(1)) - 1
        if not 0 <= agent < instance.num_agents:
            raise BadEntryError(f"Unknown agent {agent + 1}", line=number)
        if agent in paths:
            raise BadEntryError(f"Agent {agent + 1} listed twice", line=number)
        tokens = match.group(2).split()
        if not tokens:
            raise BadEntryError(f"Agent {agent + 1} has an empty path", line=number)
        try:
            paths[agent] = Path(tuple(instance.graph.vertex_of(t) for t in tokens))
        except InvalidInstanceError as e:
            raise BadEntryError(e.message, line=number) from e

    missing = [i + 1 for i in range(instance.num_agents) if i not in paths]
    if missing:
        raise BadEntryError(f"No path for agents {missing}")
    return Plan(tuple(paths[i] for i in range(instance.num_agents)))
