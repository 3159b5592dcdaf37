"""
Tests for the single-agent space-time searches
"""

import networkx as nx
import numpy as np
import pytest

from ordo.solver.core.collisions import Constraint, pair_collisions
from ordo.solver.core.graph import UNREACHABLE, GridMap, build_graph_from_grid
from ordo.solver.core.instance import Agent, Path, Semantics
from ordo.solver.core.stats import Deadline, SolverStats
from ordo.solver.exceptions import SolverTimeoutError
from ordo.solver.io import generate_random_instance
from ordo.solver.search import (
    PathTable,
    SearchBudget,
    SearchContext,
    SpaceTimeState,
    TieBreakContext,
    constrained_shortest_path,
    count_path_collisions,
    individually_optimal_path,
    prioritized_shortest_path,
)

A, B, C, D, E = range(5)


def brute_force_arrival(graph, agent, constraints, semantics, horizon):
    """Earliest arrival by layer-by-layer enumeration of reachable (vertex, time) states."""
    vertex_blocks = {(c.vertices[0], c.time) for c in constraints if len(c.vertices) == 1}
    edge_blocks = {(*c.vertices, c.time) for c in constraints if len(c.vertices) == 2}
    target_until = max(
        (t for v, t in vertex_blocks if v == agent.target), default=-1
    )
    if (agent.start, 0) in vertex_blocks:
        return None
    layer = {agent.start}
    for t in range(horizon + 1):
        if agent.target in layer and (semantics is Semantics.DISAPPEAR or t > target_until):
            return t
        nxt = set()
        for v in layer:
            if semantics is Semantics.DISAPPEAR and v == agent.target:
                continue
            for w in (v, *graph.neighbors(v)):
                if (w, t + 1) in vertex_blocks:
                    continue
                if w != v and (v, w, t + 1) in edge_blocks:
                    continue
                nxt.add(w)
        layer = nxt
    return None


@pytest.mark.unit
class TestTypes:
    def test_space_time_state(self):
        """Time steps are non-negative"""
        assert SpaceTimeState(3, 0).time == 0
        with pytest.raises(ValueError):
            SpaceTimeState(3, -1)

    def test_budget_must_be_positive(self):
        """Both limits are positive"""
        with pytest.raises(ValueError):
            SearchBudget(node_expansion_limit=0)
        with pytest.raises(ValueError):
            SearchBudget(time_horizon=0)


@pytest.mark.unit
class TestIndividuallyOptimalPath:
    def test_start_is_target(self, corridor5):
        """Zero-length path"""
        path = individually_optimal_path(corridor5, Agent(0, C, C))

        assert path == Path((C,))
        assert path.arrival == 0

    def test_corridor(self, corridor5):
        """End to end of a corridor"""
        path = individually_optimal_path(corridor5, Agent(0, A, E))

        assert path == Path((A, B, C, D, E))

    def test_matches_bfs_distance(self):
        """Arrival equals the breadth-first distance and the path has no waits"""
        instance = generate_random_instance(8, 8, 20, 6, seed=3)
        g = instance.graph.to_networkx()
        for agent in instance.agents:
            path = individually_optimal_path(instance.graph, agent)

            assert path.arrival == nx.shortest_path_length(g, agent.start, agent.target)
            assert all(u != v for u, v in zip(path, path.vertices[1:]))


@pytest.mark.unit
class TestConstrainedShortestPath:
    def test_no_constraints(self, corridor5):
        """Without constraints the result is the individually optimal path"""
        agent = Agent(0, A, E)

        assert constrained_shortest_path(corridor5, agent, ()) == individually_optimal_path(
            corridor5, agent
        )

    def test_vertex_constraint_forces_wait(self, make_corridor):
        """A-B-C with B blocked at t=1 waits once"""
        graph = make_corridor(3)
        path = constrained_shortest_path(graph, Agent(0, A, C), [Constraint.vertex(0, B, 1)])

        assert path == Path((A, A, B, C))

    def test_edge_constraint_forces_wait(self, make_corridor):
        """Forbidding A->B at t=1 also delays by one"""
        graph = make_corridor(3)
        path = constrained_shortest_path(graph, Agent(0, A, C), [Constraint.edge(0, A, B, 1)])

        assert path == Path((A, A, B, C))

    def test_target_constraint_under_stay(self, make_corridor):
        """The path may only end after the last constraint on the target"""
        graph = make_corridor(3)
        constraints = [Constraint.vertex(0, C, 5)]
        stay = constrained_shortest_path(graph, Agent(0, A, C), constraints)
        gone = constrained_shortest_path(
            graph, Agent(0, A, C), constraints, semantics=Semantics.DISAPPEAR
        )

        assert stay is not None and stay.arrival == 6
        assert stay[5] != C
        assert gone == Path((A, B, C))

    def test_target_blocked_through_horizon(self, make_corridor):
        """Blocking the target at every step up to the horizon gives no path"""
        graph = make_corridor(3)
        ctx = SearchContext(budget=SearchBudget(time_horizon=5))
        constraints = [Constraint.vertex(0, C, t) for t in range(6)]

        assert constrained_shortest_path(graph, Agent(0, A, C), constraints, ctx=ctx) is None

    def test_foreign_constraint_rejected(self, corridor5):
        """Constraints must belong to the planning agent"""
        with pytest.raises(ValueError):
            constrained_shortest_path(corridor5, Agent(0, A, E), [Constraint.vertex(1, B, 1)])

    def test_expansion_limit(self, corridor5):
        """An exhausted node budget is reported as no path"""
        ctx = SearchContext(budget=SearchBudget(node_expansion_limit=2))

        assert constrained_shortest_path(corridor5, Agent(0, A, E), (), ctx=ctx) is None

    def test_stats(self, corridor5):
        """Each search counts once; each expansion counts once"""
        ctx = SearchContext()
        constrained_shortest_path(corridor5, Agent(0, A, E), (), ctx=ctx)

        assert ctx.stats.low_level_searches == 1
        assert ctx.stats.low_level_expansions == 5

    def test_deadline(self, corridor5):
        """An expired deadline interrupts the search"""
        ctx = SearchContext(
            stats=SolverStats(), deadline=Deadline(-1.0), check_interval=1
        )

        with pytest.raises(SolverTimeoutError):
            constrained_shortest_path(corridor5, Agent(0, A, E), (), ctx=ctx)

    @pytest.mark.parametrize("semantics", list(Semantics))
    def test_matches_exhaustive_enumeration(self, semantics):
        """Arrival equals the earliest time found by exhaustive enumeration"""
        graph = build_graph_from_grid(GridMap(4, 4, frozenset({(1, 1), (2, 2)})))
        rng = np.random.default_rng(11)
        for _ in range(40):
            start, target = (int(v) for v in rng.choice(graph.vertex_count, 2, replace=False))
            agent = Agent(0, start, target)
            constraints = []
            for _ in range(int(rng.integers(0, 7))):
                t = int(rng.integers(1, 8))
                v = int(rng.integers(graph.vertex_count))
                if rng.random() < 0.6:
                    constraints.append(Constraint.vertex(0, v, t))
                elif graph.neighbors(v):
                    w = int(rng.choice(graph.neighbors(v)))
                    constraints.append(Constraint.edge(0, v, w, t))
            horizon = max((c.time for c in constraints), default=0) + graph.vertex_count

            path = constrained_shortest_path(graph, agent, constraints, semantics=semantics)
            expected = brute_force_arrival(graph, agent, constraints, semantics, horizon)

            if expected is None:
                assert path is None
            else:
                assert path is not None and path.arrival == expected

    def test_prefers_fewest_collisions(self, open_grid_3x3):
        """Among shortest paths, avoid the ones that hit other paths"""
        g = open_grid_3x3
        agent = Agent(0, g.vertex_at((0, 0)), g.vertex_at((2, 2)))
        parked = Path((g.vertex_at((1, 0)),))
        path = constrained_shortest_path(
            g, agent, (), TieBreakContext(incomparable_paths=(parked,))
        )

        assert path is not None and path.arrival == 4
        assert g.vertex_at((1, 0)) not in path.vertices

    def test_incomparable_before_lower(self, open_grid_3x3):
        """Collisions with incomparable agents weigh more than with lower agents"""
        g = open_grid_3x3
        agent = Agent(0, g.vertex_at((0, 0)), g.vertex_at((2, 2)))
        tie_ctx = TieBreakContext(
            incomparable_paths=(Path((g.vertex_at((0, 1)),)),),
            lower_paths=(Path((g.vertex_at((1, 0)),)),),
        )
        path = constrained_shortest_path(g, agent, (), tie_ctx)

        assert path is not None
        assert path[1] == g.vertex_at((1, 0))

    def test_deterministic(self, open_grid_3x3):
        """Identical inputs give identical paths"""
        g = open_grid_3x3
        agent = Agent(0, g.vertex_at((0, 0)), g.vertex_at((2, 2)))
        constraints = [Constraint.vertex(0, g.vertex_at((1, 1)), 2)]

        first = constrained_shortest_path(g, agent, constraints)
        assert all(
            constrained_shortest_path(g, agent, constraints) == first for _ in range(5)
        )


@pytest.mark.unit
class TestPrioritizedShortestPath:
    def test_no_higher_paths(self, open_grid_3x3):
        """Without obstacles the result is the individually optimal path"""
        g = open_grid_3x3
        agent = Agent(0, g.vertex_at((0, 2)), g.vertex_at((2, 0)))

        assert prioritized_shortest_path(g, agent, (), Semantics.STAY) == individually_optimal_path(
            g, agent
        )

    def test_dodges_into_pocket(self, pocket_instance):
        """Agent 2 steps into the pocket while agent 1 crosses the corridor"""
        g = pocket_instance.graph
        first, second = pocket_instance.agents
        higher = individually_optimal_path(g, first)
        path = prioritized_shortest_path(g, second, [higher], Semantics.STAY)

        assert path is not None
        assert path.arrival == 4
        assert path.end == g.vertex_of("(2,2)")
        assert g.vertex_of("(3,1)") in path.vertices
        assert pair_collisions(0, higher, 1, path, Semantics.STAY) == []

    def test_blocked_by_parked_agent(self, make_corridor):
        """A parked higher agent on the only way to the target leaves no path"""
        graph = make_corridor(3)
        parked = Path((B,))

        assert prioritized_shortest_path(graph, Agent(1, A, C), [parked], Semantics.STAY) is None

    def test_vanished_agent_does_not_block(self, make_corridor):
        """Under disappear the same agent is gone after its arrival step"""
        graph = make_corridor(3)
        parked = Path((B,))
        path = prioritized_shortest_path(graph, Agent(1, A, C), [parked], Semantics.DISAPPEAR)

        assert path == Path((A, B, C))

    def test_target_parked_by_higher_agent(self, corridor5):
        """A target that a higher agent ends on is unreachable forever"""
        higher = Path((E, D))

        assert prioritized_shortest_path(corridor5, Agent(1, A, D), [higher], Semantics.STAY) is None

    def test_waits_for_target_to_clear(self, corridor5):
        """Under stay the agent may only settle after the last higher visit"""
        higher = Path((C, C, C, D, E))
        path = prioritized_shortest_path(corridor5, Agent(1, A, D), [higher], Semantics.STAY)

        assert path is not None
        assert path.arrival == 4
        assert pair_collisions(0, higher, 1, path, Semantics.STAY) == []

    @pytest.mark.parametrize("semantics", list(Semantics))
    def test_safety_and_switchover(self, semantics):
        """Sequential planning never collides with higher paths and finishes on a
        shortest static path after the last higher arrival"""
        for seed in range(5):
            instance = generate_random_instance(7, 7, 15, 6, seed=seed, semantics=semantics)
            graph = instance.graph
            higher: list[Path] = []
            for agent in instance.agents:
                path = prioritized_shortest_path(graph, agent, higher, semantics)
                if path is None:
                    continue
                for k, other in enumerate(higher):
                    assert pair_collisions(k, other, len(higher), path, semantics) == []

                t_max = PathTable(higher, semantics).horizon
                if path.arrival > t_max:
                    parked = (
                        frozenset(p.end for p in higher)
                        if semantics is Semantics.STAY
                        else frozenset()
                    )
                    reduced = graph.distances_to(agent.target, blocked=parked)
                    suffix = path.vertices[t_max:]
                    assert reduced[suffix[0]] != UNREACHABLE
                    assert reduced[suffix[0]] == path.arrival - t_max
                    assert all(u != v for u, v in zip(suffix, suffix[1:]))
                higher.append(path)


@pytest.mark.unit
class TestCountPathCollisions:
    def test_disjoint(self):
        """No shared vertices"""
        assert count_path_collisions(Path((A, B)), [Path((D, E))], Semantics.STAY) == 0

    def test_identical(self):
        """Identical paths collide once"""
        assert count_path_collisions(Path((A, B)), [Path((A, B))], Semantics.STAY) == 1

    def test_counts_paths_not_events(self):
        """A swap plus a vertex hit with the same path counts as one"""
        path = Path((A, B, A))
        other = Path((B, A, A))

        assert count_path_collisions(path, [other], Semantics.STAY) == 1

    def test_several_paths(self):
        """Each colliding path counts once"""
        others = [Path((C, B)), Path((B, A)), Path((E,))]

        assert count_path_collisions(Path((A, B)), others, Semantics.STAY) == 2
        assert count_path_collisions(Path((A, B)), [], Semantics.STAY) == 0
