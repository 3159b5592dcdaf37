from .lowlevel import (
    SearchBudget,
    SearchContext,
    SpaceTimeState,
    TieBreakContext,
    constrained_shortest_path,
    count_path_collisions,
    individually_optimal_path,
    prioritized_shortest_path,
)
from .occupancy import PathTable

__all__ = [
    "PathTable",
    "SearchBudget",
    "SearchContext",
    "SpaceTimeState",
    "TieBreakContext",
    "constrained_shortest_path",
    "count_path_collisions",
    "individually_optimal_path",
    "prioritized_shortest_path",
]
