"""Structural checks on instances and solutions."""

from __future__ import annotations

import logging

import networkx as nx

from ..core.instance import Instance, Plan
from ..core.ordering import PriorityOrdering
from ..search.lowlevel import prioritized_shortest_path

logger = logging.getLogger(__name__)


def wellformed_check(instance: Instance) -> bool:
    """True iff every agent can reach its target while avoiding the starts and
    targets of all other agents."""
    graph = instance.graph.to_networkx()
    endpoints = {v for a in instance.agents for v in (a.start, a.target)}
    for agent in instance.agents:
        removed = endpoints - {agent.start, agent.target}
        view = nx.restricted_view(graph, removed, [])
        if not nx.has_path(view, agent.start, agent.target):
            logger.debug("Agent %d cannot avoid the other endpoints", agent.index + 1)
            return False
    return True


def is_consistent(instance: Instance, plan: Plan, ordering: PriorityOrdering) -> bool:
    """True iff no agent could arrive earlier if only its higher-priority agents
    remained on the graph."""
    for agent in instance.agents:
        higher = [plan[k] for k in ordering.higher_than(agent.index)]
        best = prioritized_shortest_path(
            instance.graph, agent, higher, instance.semantics
        )
        if best is None or best.arrival != plan[agent.index].arrival:
            logger.debug(
                "Agent %d arrives at %d, best response arrives at %s",
                agent.index + 1,
                plan[agent.index].arrival,
                None if best is None else best.arrival,
            )
            return False
    return True
