"""
Pytest configuration and fixtures for ordo tests
"""

from pathlib import Path

import pytest
from click.testing import CliRunner

from ordo.solver.config import Config
from ordo.solver.core.graph import Graph, GridMap, build_graph_from_grid
from ordo.solver.core.instance import Instance, Semantics
from ordo.solver.io import parse_graph_fixture

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> Instance:
    return parse_graph_fixture((FIXTURES / name).read_text(encoding="utf-8"), name=name)


def corridor(length: int) -> Graph:
    """Path graph 0 - 1 - ... - (length-1)."""
    return Graph.from_edges(length, [(v, v + 1) for v in range(length - 1)])


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding the graph, map and scenario fixtures"""
    return FIXTURES


@pytest.fixture
def test_config():
    """Fixture providing solver configuration with short limits"""
    return Config(
        timeout=10.0,
        deadline_check_interval=100,
        node_expansion_limit=200_000,
        rnd_runs=4,
        max_enumeration_agents=4,
        joint_cost_cap_factor=4,
        generator_max_attempts=200,
    )


@pytest.fixture
def pocket_instance() -> Instance:
    """Two agents on a corridor with one pocket; only ordering 1 < 2 works"""
    return load_fixture("pocket.graph")


@pytest.fixture
def hub_instance() -> Instance:
    """Three agents around a hub vertex"""
    return load_fixture("hub.graph")


@pytest.fixture
def wellformed_instance() -> Instance:
    """Three agents whose endpoints all sit in corridor pockets"""
    return load_fixture("wellformed.graph")


@pytest.fixture
def corridor5() -> Graph:
    """Five vertices in a row"""
    return corridor(5)


@pytest.fixture
def make_corridor():
    """Factory for path graphs of a given length"""
    return corridor


@pytest.fixture
def load_graph_fixture():
    """Factory loading a fixture file by name"""
    return load_fixture


@pytest.fixture
def open_grid_3x3() -> Graph:
    """Obstacle-free 3x3 grid graph"""
    return build_graph_from_grid(GridMap(3, 3))


@pytest.fixture
def swap_instance(open_grid_3x3) -> Instance:
    """Two agents exchanging opposite corners of a 3x3 grid"""
    g = open_grid_3x3
    return Instance.from_endpoints(
        g,
        [(g.vertex_at((0, 0)), g.vertex_at((2, 2))), (g.vertex_at((2, 2)), g.vertex_at((0, 0)))],
        Semantics.STAY,
        name="swap-3x3",
    )


@pytest.fixture
def cli_runner() -> CliRunner:
    """Provide a Click CLI runner for testing commands."""
    return CliRunner()
