from .collisions import (
    Collision,
    CollisionKind,
    Constraint,
    Violation,
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
from .graph import Cell, Graph, GridMap, build_graph_from_grid
from .instance import Agent, Instance, Path, Plan, Semantics
from .ordering import (
    PriorityOrdering,
    extends,
    ordering_add,
    precedes,
    topo_below,
)
from .stats import Deadline, SolveOutcome, SolveResult, SolverStats

__all__ = [
    "Agent",
    "Cell",
    "Collision",
    "CollisionKind",
    "Constraint",
    "Deadline",
    "Graph",
    "GridMap",
    "Instance",
    "Path",
    "Plan",
    "PriorityOrdering",
    "Semantics",
    "SolveOutcome",
    "SolveResult",
    "SolverStats",
    "Violation",
    "ViolationKind",
    "build_graph_from_grid",
    "constraint_for",
    "detect_collisions",
    "extends",
    "first_collision",
    "flowtime",
    "is_valid_solution",
    "makespan",
    "ordering_add",
    "pair_collisions",
    "paths_collide",
    "precedes",
    "topo_below",
    "validate_solution",
]
