"""
Tests for the joint-space oracle, ordering enumeration and structural checks
"""

import pytest

from ordo.solver.core.collisions import flowtime, is_valid_solution
from ordo.solver.core.instance import Instance, Semantics
from ordo.solver.core.ordering import PriorityOrdering
from ordo.solver.core.stats import SolveResult
from ordo.solver.exceptions import RefusedTooLargeError
from ordo.solver.io import parse_solution
from ordo.solver.oracle import (
    default_cost_cap,
    enumerate_total_orderings,
    is_consistent,
    joint_optimal,
    wellformed_check,
)


@pytest.fixture
def hub_plan(hub_instance, fixtures_dir):
    """Reference plan for the hub instance"""
    return parse_solution(
        (fixtures_dir / "hub.solution").read_text(encoding="utf-8"), hub_instance
    )


@pytest.mark.unit
class TestJointOptimal:
    def test_pocket(self, pocket_instance):
        """Agent 2 has to dodge into the pocket"""
        plan = joint_optimal(pocket_instance)

        assert plan is not None
        assert is_valid_solution(pocket_instance, plan)
        assert flowtime(plan) == 8

    def test_pocket_disappear(self, pocket_instance):
        """Vanishing agents only cost agent 1 a single wait"""
        instance = pocket_instance.with_semantics(Semantics.DISAPPEAR)
        plan = joint_optimal(instance)

        assert plan is not None
        assert is_valid_solution(instance, plan)
        assert flowtime(plan) == 6

    def test_swap(self, swap_instance):
        """Opposite corners can be exchanged without waiting"""
        plan = joint_optimal(swap_instance)

        assert plan is not None
        assert flowtime(plan) == 8

    def test_single_agent(self, corridor5):
        """One agent gets its shortest path"""
        plan = joint_optimal(Instance.from_endpoints(corridor5, [(4, 1)]))

        assert plan is not None
        assert plan.arrivals == (3,)

    def test_cost_cap(self, pocket_instance):
        """Nothing is returned above the cap"""
        assert joint_optimal(pocket_instance, cost_cap=7) is None
        assert joint_optimal(pocket_instance, cost_cap=8) is not None

    def test_unsolvable(self, corridor5):
        """Two agents swapping ends of a corridor can never pass"""
        instance = Instance.from_endpoints(corridor5, [(0, 4), (4, 0)])

        assert joint_optimal(instance) is None

    def test_default_cost_cap(self, pocket_instance):
        """factor * (sum of shortest lengths + number of agents)"""
        assert default_cost_cap(pocket_instance, factor=4) == 28
        assert default_cost_cap(pocket_instance, factor=1) == 7


@pytest.mark.unit
class TestEnumerateTotalOrderings:
    def test_pocket(self, pocket_instance, test_config):
        """Exactly one of the two orderings solves"""
        outcomes = enumerate_total_orderings(pocket_instance, config=test_config)

        assert [o.order for o in outcomes] == [(0, 1), (1, 0)]
        assert outcomes[0].solved
        assert outcomes[0].flowtime == 8
        assert outcomes[1].result is SolveResult.NO_SOLUTION
        assert outcomes[1].flowtime is None

    def test_wellformed_instance(self, wellformed_instance, test_config):
        """Every ordering solves an instance whose endpoints sit in pockets"""
        outcomes = enumerate_total_orderings(wellformed_instance, config=test_config)

        assert len(outcomes) == 6
        assert all(o.solved for o in outcomes)

    def test_refused(self, hub_instance, test_config):
        """Too many agents for the enumeration limit"""
        with pytest.raises(RefusedTooLargeError) as exc_info:
            enumerate_total_orderings(hub_instance, max_m=2, config=test_config)

        assert exc_info.value.num_agents == 3
        assert exc_info.value.error_code == "REFUSED_TOO_LARGE"

    def test_limit_from_config(self, hub_instance, test_config):
        """Without max_m the configured limit applies"""
        small = test_config.model_copy(update={"max_enumeration_agents": 2})

        with pytest.raises(RefusedTooLargeError):
            enumerate_total_orderings(hub_instance, config=small)


@pytest.mark.unit
class TestChecks:
    def test_wellformed(self, wellformed_instance):
        """Pocket endpoints are avoidable"""
        assert wellformed_check(wellformed_instance)

    def test_not_wellformed(self, pocket_instance):
        """Agent 1 cannot avoid agent 2's endpoints on the corridor"""
        assert not wellformed_check(pocket_instance)

    def test_consistent(self, hub_instance, hub_plan):
        """The hub plan is a best response under 1 < 3 < 2"""
        assert is_valid_solution(hub_instance, hub_plan)
        assert is_consistent(hub_instance, hub_plan, PriorityOrdering.total([0, 2, 1]))

    def test_inconsistent(self, hub_instance, hub_plan):
        """With agent 2 on top it could arrive at t=1"""
        assert not is_consistent(hub_instance, hub_plan, PriorityOrdering.total([1, 0, 2]))
