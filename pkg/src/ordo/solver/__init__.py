"""
ordo solver library

Multi-agent path finding on undirected graphs: Conflict-Based Search, its
prioritized variant CBSw/P, Priority-Based Search and standard prioritized
planning with fixed, longest-first, shortest-first or random orderings.
"""

from .config import Config, get_config
from .core import (
    Agent,
    Collision,
    Graph,
    GridMap,
    Instance,
    Path,
    Plan,
    PriorityOrdering,
    Semantics,
    SolveOutcome,
    SolveResult,
    SolverStats,
    build_graph_from_grid,
    detect_collisions,
    flowtime,
    makespan,
    validate_solution,
)
from .exceptions import OrdoError
from .solvers import (
    CBSMode,
    OrderingStrategy,
    build_total_ordering,
    solve_cbs,
    solve_pbs,
    solve_rnd,
)

__version__ = "0.1.0"

__all__ = [
    # Solvers
    "CBSMode",
    "OrderingStrategy",
    "build_total_ordering",
    "solve_cbs",
    "solve_pbs",
    "solve_rnd",
    # Model
    "Agent",
    "Collision",
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
    "build_graph_from_grid",
    "detect_collisions",
    "flowtime",
    "makespan",
    "validate_solution",
    # Configuration
    "Config",
    "get_config",
    # Exceptions
    "OrdoError",
]
