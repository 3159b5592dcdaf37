from .checks import is_consistent, wellformed_check
from .joint import default_cost_cap, joint_optimal
from .orderings import OrderingOutcome, enumerate_total_orderings

__all__ = [
    "OrderingOutcome",
    "default_cost_cap",
    "enumerate_total_orderings",
    "is_consistent",
    "joint_optimal",
    "wellformed_check",
]
