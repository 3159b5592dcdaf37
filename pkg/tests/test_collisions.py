"""
Tests for collision detection, metrics and solution validation
"""

import pytest

from ordo.solver.core.collisions import (
    Collision,
    CollisionKind,
    Constraint,
    ViolationKind,
    constraint_for,
    detect_collisions,
    first_collision,
    flowtime,
    is_valid_solution,
    makespan,
    pair_collisions,
    paths_collide,
    validate_solution,
)
from ordo.solver.core.instance import Instance, Path, Plan, Semantics

A, B, C, D, E = range(5)


@pytest.fixture
def two_agents(corridor5) -> Instance:
    return Instance.from_endpoints(corridor5, [(A, E), (E, A)])


def plan_of(*paths):
    return Plan(tuple(Path(p) for p in paths))


@pytest.mark.unit
class TestDetectCollisions:
    def test_vertex_collision(self, two_agents):
        """Two agents entering the same vertex"""
        found = detect_collisions(two_agents, plan_of((A, B), (C, B)))

        assert found == [Collision(CollisionKind.VERTEX, (0, 1), (B,), 1)]

    def test_edge_collision(self, two_agents):
        """Two agents swapping along one edge; vertices follow the lower agent's move"""
        found = detect_collisions(two_agents, plan_of((A, B), (B, A)))

        assert found == [Collision(CollisionKind.EDGE, (0, 1), (A, B), 1)]

    def test_parked_agent_collides(self, two_agents):
        """Under stay a finished agent still blocks its target"""
        plan = plan_of((A, B), (C, C, C, B))

        assert detect_collisions(two_agents, plan) == [
            Collision(CollisionKind.VERTEX, (0, 1), (B,), 3)
        ]
        gone = two_agents.with_semantics(Semantics.DISAPPEAR)
        assert detect_collisions(gone, plan) == []

    def test_sorted_by_time_then_agents(self, corridor5):
        """Output order is (time, lower agent, higher agent, kind)"""
        instance = Instance.from_endpoints(corridor5, [(A, E), (B, D), (E, A)])
        plan = plan_of((A, B, C), (D, D, C), (E, D, C))
        found = detect_collisions(instance, plan)

        assert [(c.time, c.agents) for c in found] == [
            (1, (1, 2)),
            (2, (0, 1)),
            (2, (0, 2)),
            (2, (1, 2)),
        ]

    def test_each_pair_reported_once(self, two_agents):
        """A shared vertex yields one record per unordered pair"""
        found = detect_collisions(two_agents, plan_of((B, B), (B, B)))

        assert len(found) == 2
        assert {c.time for c in found} == {0, 1}

    def test_deterministic(self, two_agents):
        """Repeated calls give identical output"""
        plan = plan_of((A, B, C, D), (D, C, B, A))

        assert detect_collisions(two_agents, plan) == detect_collisions(two_agents, plan)

    def test_semantics_agree_before_arrival(self, corridor5):
        """Both semantics report the same collisions up to the earlier arrival"""
        instance = Instance.from_endpoints(corridor5, [(A, C), (E, B)])
        plan = plan_of((A, B, C), (E, D, C, C))
        stay = detect_collisions(instance, plan)
        gone = detect_collisions(instance.with_semantics(Semantics.DISAPPEAR), plan)

        assert [c for c in stay if c.time <= 2] == [c for c in gone if c.time <= 2]
        assert [c.time for c in stay] == [2, 3]
        assert [c.time for c in gone] == [2]


@pytest.mark.unit
class TestFirstCollision:
    def test_none_when_free(self, two_agents):
        """A collision-free plan has no first collision"""
        assert first_collision(two_agents, plan_of((A,), (E,))) is None

    def test_earliest(self, two_agents):
        """The earliest collision wins"""
        plan = plan_of((A, B, C, C), (C, B, A, A))
        found = first_collision(two_agents, plan)

        assert found is not None
        assert found.time == 1

    def test_vertex_sorts_before_edge(self):
        """At equal time and agents the vertex collision comes first"""
        vertex = Collision(CollisionKind.VERTEX, (0, 1), (2,), 2)
        edge = Collision(CollisionKind.EDGE, (0, 1), (1, 2), 2)

        assert min([edge, vertex], key=lambda c: c.sort_key) is vertex


@pytest.mark.unit
class TestPairHelpers:
    def test_pair_collisions_keeps_ids(self):
        """Pair collisions are reported with the given agent ids"""
        found = pair_collisions(3, Path((A, B)), 7, Path((C, B)), Semantics.STAY)

        assert found[0].agents == (3, 7)

    def test_paths_collide(self):
        """Quick boolean check"""
        assert paths_collide(Path((A, B)), Path((B, A)), Semantics.STAY)
        assert not paths_collide(Path((A, B)), Path((D, C)), Semantics.STAY)

    def test_collision_helpers(self):
        """Other agent and involvement"""
        c = Collision(CollisionKind.VERTEX, (1, 4), (B,), 3)

        assert c.involves(4)
        assert not c.involves(2)
        assert c.other(1) == 4
        assert c.other(4) == 1


@pytest.mark.unit
class TestConstraintFor:
    def test_vertex(self):
        """Both sides get the same vertex constraint"""
        c = Collision(CollisionKind.VERTEX, (0, 1), (B,), 2)

        assert constraint_for(c, 0) == Constraint.vertex(0, B, 2)
        assert constraint_for(c, 1) == Constraint.vertex(1, B, 2)

    def test_edge_direction(self):
        """Each side is forbidden its own direction of travel"""
        c = Collision(CollisionKind.EDGE, (0, 1), (A, B), 1)

        assert constraint_for(c, 0) == Constraint.edge(0, A, B, 1)
        assert constraint_for(c, 1) == Constraint.edge(1, B, A, 1)


@pytest.mark.unit
class TestMetrics:
    def test_flowtime(self):
        """Sum of arrivals"""
        assert flowtime(plan_of((A,))) == 0
        assert flowtime(plan_of((A, B, C, D, E), (A, B, C, D))) == 7

    def test_makespan(self):
        """Largest arrival"""
        assert makespan(plan_of((A, B, C, D, E), (A, B, C, D))) == 4
        assert makespan(plan_of((A,))) == 0
        assert makespan(plan_of((A, B, C), (A, B, C), (A, B, C, D, E, D, E, D))) == 7


@pytest.mark.unit
class TestValidateSolution:
    def test_valid(self, two_agents):
        """A collision-free plan with correct endpoints is valid"""
        instance = Instance.from_endpoints(two_agents.graph, [(A, B), (E, D)])

        assert validate_solution(instance, plan_of((A, B), (E, D))) == []
        assert is_valid_solution(instance, plan_of((A, B), (E, D)))

    def test_teleport(self, corridor5):
        """Consecutive vertices must be adjacent"""
        instance = Instance.from_endpoints(corridor5, [(A, C)])
        violations = validate_solution(instance, plan_of((A, C)))

        assert [v.kind for v in violations] == [ViolationKind.NOT_ADJACENT]
        assert violations[0].time == 1

    def test_swap(self, corridor5):
        """A swap is an edge-collision violation"""
        instance = Instance.from_endpoints(corridor5, [(A, B), (B, A)])
        violations = validate_solution(instance, plan_of((A, B), (B, A)))

        assert [v.kind for v in violations] == [ViolationKind.EDGE_COLLISION]
        assert "Agents 1 and 2" in violations[0].message

    def test_wrong_endpoints(self, two_agents):
        """Paths must start and end at the agent's endpoints"""
        violations = validate_solution(two_agents, plan_of((B, C, D, E), (E, D, C)))
        kinds = {v.kind for v in violations}

        assert ViolationKind.WRONG_START in kinds
        assert ViolationKind.WRONG_TARGET in kinds

    def test_missing_path(self, two_agents):
        """Every agent needs a path"""
        violations = validate_solution(two_agents, plan_of((A, B, C, D, E)))

        assert [v.kind for v in violations] == [ViolationKind.MISSING_PATH]

    def test_unknown_vertex(self, corridor5):
        """Vertex ids must exist"""
        instance = Instance.from_endpoints(corridor5, [(A, B)])
        violations = validate_solution(instance, plan_of((A, 9, B)))

        assert [v.kind for v in violations] == [ViolationKind.UNKNOWN_VERTEX]

    def test_early_arrival_under_disappear(self, corridor5):
        """A vanishing agent must end its path on the first target visit"""
        instance = Instance.from_endpoints(corridor5, [(A, B)], Semantics.DISAPPEAR)
        violations = validate_solution(instance, plan_of((A, B, C, B)))

        assert [v.kind for v in violations] == [ViolationKind.EARLY_ARRIVAL]
        assert is_valid_solution(instance.with_semantics(Semantics.STAY), plan_of((A, B, C, B)))
