from .fixture import (
    GraphFixture,
    parse_graph_fixture,
    read_graph_fixture,
    serialize_graph_fixture,
)
from .generator import (
    generate_random_instance,
    generate_wellformed_instance,
    grid_of,
    make_rng,
)
from .movingai import (
    ScenarioEntry,
    parse_map,
    parse_scen,
    parse_scen_entries,
    scenario_entries,
    serialize_map,
    serialize_scen,
)
from .solution import format_solution, parse_solution

__all__ = [
    "GraphFixture",
    "ScenarioEntry",
    "format_solution",
    "generate_random_instance",
    "generate_wellformed_instance",
    "grid_of",
    "make_rng",
    "parse_graph_fixture",
    "parse_map",
    "parse_scen",
    "parse_scen_entries",
    "parse_solution",
    "read_graph_fixture",
    "scenario_entries",
    "serialize_graph_fixture",
    "serialize_map",
    "serialize_scen",
]
