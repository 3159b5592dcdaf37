from .cbs import CBSMode, CBSSolver, CTNode, choose_collision, expand_ct_node, solve_cbs
from .pbs import (
    OrderingStrategy,
    PBSSolver,
    PTNode,
    RNDSolver,
    StrategyKind,
    build_total_ordering,
    derive_run_seeds,
    solve_pbs,
    solve_rnd,
    update_plan,
)

__all__ = [
    "CBSMode",
    "CBSSolver",
    "CTNode",
    "OrderingStrategy",
    "PBSSolver",
    "PTNode",
    "RNDSolver",
    "StrategyKind",
    "build_total_ordering",
    "choose_collision",
    "derive_run_seeds",
    "expand_ct_node",
    "solve_cbs",
    "solve_pbs",
    "solve_rnd",
    "update_plan",
]
