"""Settings and experiment configuration for the ordo CLI."""

from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator
from pydantic_settings import BaseSettings

from ordo.solver.core.instance import Semantics

from .utils.exceptions import ConfigurationError

ALGORITHMS = ("cbs", "cbswp", "pbs", "fix", "lh", "sh", "rnd")


class BenchSettings(BaseSettings):
    """Process-level settings with environment variable support (prefix ``MAPF_``)."""

    # Worker pool
    THREADS: Optional[int] = None

    # Logging Configuration
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(message)s"

    # Allowed overshoot of a run beyond its timeout
    GRACE_SECONDS: float = 1.0

    class Config:
        env_prefix = "MAPF_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True


def _split(value: object) -> object:
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    return value


class BenchConfig(BaseModel):
    """One experiment: algorithms x instances.

    Generator sources enumerate (obstacle_pct, agents, seed); scenario sources
    enumerate (scen file, agents) and record the scen file position as seed.
    """

    model_config = ConfigDict(extra="forbid")

    algorithms: list[str]
    source: Literal["generator", "scenario"] = "generator"
    map: Optional[str] = None
    scen: list[str] = []
    width: int = 20
    height: int = 20
    obstacle_pct: list[float] = [0.0]
    agents: list[int]
    seeds: list[int] = [0]
    timeout: float = 60.0
    semantics: Semantics = Semantics.STAY
    well_formed: bool = False
    rnd_runs: int = 10

    @field_validator("algorithms", "scen", "obstacle_pct", "agents", mode="before")
    @classmethod
    def split_lists(cls, value: object) -> object:
        return _split(value)

    @field_validator("algorithms")
    @classmethod
    def known_algorithms(cls, value: list[str]) -> list[str]:
        names = [v.lower() for v in value]
        unknown = sorted(set(names) - set(ALGORITHMS))
        if unknown:
            raise ValueError(f"unknown algorithms {unknown}; choose from {ALGORITHMS}")
        if not names:
            raise ValueError("at least one algorithm is required")
        return names

    @field_validator("seeds", mode="before")
    @classmethod
    def expand_seeds(cls, value: object) -> object:
        """``N`` means seeds 0..N-1, ``a..b`` the inclusive range, else a comma list."""
        if isinstance(value, int):
            return list(range(value))
        if isinstance(value, str):
            text = value.strip()
            if ".." in text:
                lo, hi = text.split("..", 1)
                return list(range(int(lo), int(hi) + 1))
            if "," not in text:
                return list(range(int(text)))
            return _split(text)
        return value

    @field_validator("agents")
    @classmethod
    def non_negative_agents(cls, value: list[int]) -> list[int]:
        if any(m < 0 for m in value):
            raise ValueError("agent counts must be non-negative")
        return value

    @field_validator("timeout")
    @classmethod
    def positive_timeout(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("timeout must be positive")
        return value

    @model_validator(mode="after")
    def check_source(self) -> BenchConfig:
        if self.source == "scenario" and (not self.map or not self.scen):
            raise ValueError("scenario source needs 'map' and 'scen'")
        if self.rnd_runs <= 0:
            raise ValueError("rnd_runs must be positive")
        return self


def parse_bench_config(text: str, source: str = "<config>") -> BenchConfig:
    """Parse line-oriented ``key=value`` text (``#`` starts a comment)."""
    values: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"line {number}: expected key=value", source)
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in BenchConfig.model_fields:
            raise ConfigurationError(f"line {number}: unknown key '{key}'", source)
        values[key] = value
    try:
        return BenchConfig(**values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigurationError(problems, source) from e


def load_bench_config(path: Union[str, Path]) -> BenchConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(str(e), str(path)) from e
    return parse_bench_config(text, str(path))


_settings: Optional[BenchSettings] = None


def get_settings() -> BenchSettings:
    global _settings
    if _settings is None:
        _settings = BenchSettings()
    return _settings
