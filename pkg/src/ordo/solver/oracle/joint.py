"""Flowtime-optimal search over the joint state space of all agents.

Only usable for a handful of agents on small graphs; it exists to check the
solvers, never to be called by them.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from typing import Optional

from ..config import get_config
from ..core.instance import Instance, Path, Plan, Semantics
from ..search.lowlevel import individually_optimal_path

logger = logging.getLogger(__name__)

# positions (None once vanished) and per-agent done flags
JointState = tuple[tuple[Optional[int], ...], tuple[bool, ...]]


def default_cost_cap(instance: Instance, factor: Optional[int] = None) -> int:
    factor = factor if factor is not None else get_config().joint_cost_cap_factor
    total = sum(
        individually_optimal_path(instance.graph, a).arrival for a in instance.agents
    )
    return factor * total + factor * instance.num_agents


def _initial_state(instance: Instance) -> JointState:
    positions: list[Optional[int]] = [a.start for a in instance.agents]
    done = [False] * instance.num_agents
    if instance.semantics is Semantics.DISAPPEAR:
        for a in instance.agents:
            if a.start == a.target:
                positions[a.index] = None
                done[a.index] = True
    return tuple(positions), tuple(done)


def _step_successors(instance: Instance, state: JointState) -> list[JointState]:
    """Every collision-free joint move of the agents that are not done."""
    positions, done = state
    graph = instance.graph
    disappear = instance.semantics is Semantics.DISAPPEAR
    active = [k for k, d in enumerate(done) if not d]
    parked = {positions[k] for k, d in enumerate(done) if d and positions[k] is not None}

    options = []
    for k in active:
        v = positions[k]
        assert v is not None
        options.append([w for w in (v, *graph.neighbors(v)) if w not in parked])

    successors: list[JointState] = []
    for moves in itertools.product(*options):
        if len(set(moves)) != len(moves):
            continue
        swapped = False
        for (a, wa), (b, wb) in itertools.combinations(zip(active, moves), 2):
            if wa == positions[b] and wb == positions[a] and wa != wb:
                swapped = True
                break
        if swapped:
            continue

        new_positions = list(positions)
        new_done = list(done)
        for k, w in zip(active, moves):
            new_positions[k] = w
            if disappear and w == instance.agents[k].target:
                new_positions[k] = None
                new_done[k] = True
        successors.append((tuple(new_positions), tuple(new_done)))
    return successors


def _heuristic(instance: Instance, state: JointState) -> int:
    positions, done = state
    total = 0
    for agent, v, d in zip(instance.agents, positions, done):
        if not d and v is not None:
            total += instance.graph.distances_to(agent.target)[v]
    return total


def _rebuild(
    instance: Instance,
    goal: JointState,
    parents: dict[JointState, tuple[Optional[JointState], bool]],
) -> Plan:
    chain: list[tuple[JointState, bool]] = []
    state: Optional[JointState] = goal
    while state is not None:
        parent, is_step = parents[state]
        chain.append((state, is_step))
        state = parent
    chain.reverse()

    trajectories: list[list[int]] = [[a.start] for a in instance.agents]
    finished = list(_initial_state(instance)[1])
    for state, is_step in chain[1:]:
        positions, done = state
        if is_step:
            for k in range(instance.num_agents):
                if not finished[k]:
                    v = positions[k]
                    trajectories[k].append(v if v is not None else instance.agents[k].target)
        finished = list(done)
    return Plan(tuple(Path(tuple(t)) for t in trajectories))


def joint_optimal(instance: Instance, cost_cap: Optional[int] = None) -> Optional[Plan]:
    """Minimum-flowtime collision-free plan, or None when none costs at most ``cost_cap``.

    A step costs one per agent that is not done. Under ``Semantics.STAY`` an
    agent standing on its target may be declared done at no cost and never
    moves again; under ``Semantics.DISAPPEAR`` reaching the target makes it
    done and it leaves the graph.
    """
    cap = default_cost_cap(instance) if cost_cap is None else cost_cap
    start = _initial_state(instance)
    counter = itertools.count()
    best_g: dict[JointState, int] = {start: 0}
    parents: dict[JointState, tuple[Optional[JointState], bool]] = {start: (None, False)}
    open_list = [(_heuristic(instance, start), 0, next(counter), start)]

    while open_list:
        f, g, _, state = heapq.heappop(open_list)
        if g > best_g.get(state, g):
            continue
        if f > cap:
            break
        positions, done = state
        if all(done):
            return _rebuild(instance, state, parents)

        step_cost = sum(1 for d in done if not d)
        successors: list[tuple[JointState, int, bool]] = [
            (s, g + step_cost, True) for s in _step_successors(instance, state)
        ]
        for k, agent in enumerate(instance.agents):
            if not done[k] and positions[k] == agent.target:
                flags = list(done)
                flags[k] = True
                successors.append(((positions, tuple(flags)), g, False))

        for succ, succ_g, is_step in successors:
            if succ_g < best_g.get(succ, succ_g + 1):
                best_g[succ] = succ_g
                parents[succ] = (state, is_step)
                heapq.heappush(
                    open_list,
                    (succ_g + _heuristic(instance, succ), succ_g, next(counter), succ),
                )

    logger.debug("Joint search exhausted below cost cap %d", cap)
    return None
