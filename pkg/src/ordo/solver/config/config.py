import os
from typing import Optional

from pydantic import BaseModel


class Config(BaseModel):
    # Time limits
    timeout: float = 60.0  # seconds per solve
    deadline_check_interval: int = 10_000  # low-level expansions between checks

    # Search limits
    node_expansion_limit: int = 10_000_000

    # Solver variants
    rnd_runs: int = 10
    max_enumeration_agents: int = 5

    # Oracle / generators
    joint_cost_cap_factor: int = 4
    generator_max_attempts: int = 1000

    @classmethod
    def from_env(cls) -> "Config":
        return cls(
            timeout=float(os.getenv("ORDO_TIMEOUT", "60.0")),
            deadline_check_interval=int(os.getenv("ORDO_CHECK_INTERVAL", "10000")),
            node_expansion_limit=int(os.getenv("ORDO_NODE_LIMIT", "10000000")),
            rnd_runs=int(os.getenv("ORDO_RND_RUNS", "10")),
            max_enumeration_agents=int(os.getenv("ORDO_MAX_ENUM_AGENTS", "5")),
            joint_cost_cap_factor=int(os.getenv("ORDO_JOINT_CAP_FACTOR", "4")),
            generator_max_attempts=int(os.getenv("ORDO_GENERATOR_ATTEMPTS", "1000")),
        )


_config: Optional[Config] = None


def get_config() -> Config:
    global _config
    if _config is None:
        _config = Config.from_env()
    return _config
