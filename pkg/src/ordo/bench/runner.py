"""Experiment sweeps: algorithm x instance matrix, CSV records and aggregation."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from ordo.solver.config import Config, get_config
from ordo.solver.core.instance import Instance
from ordo.solver.core.ordering import PriorityOrdering
from ordo.solver.core.stats import SolveOutcome, SolveResult
from ordo.solver.exceptions import OrdoError
from ordo.solver.io import (
    generate_random_instance,
    generate_wellformed_instance,
    parse_map,
    parse_scen,
)
from ordo.solver.solvers import (
    CBSMode,
    OrderingStrategy,
    build_total_ordering,
    solve_cbs,
    solve_pbs,
    solve_rnd,
)

from .config import ALGORITHMS, BenchConfig, get_settings
from .utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "algorithm",
    "map",
    "seed",
    "m",
    "obstacle_pct",
    "semantics",
    "result",
    "runtime_s",
    "flowtime",
    "makespan",
    "hl_expansions",
    "ll_expansions",
]
INSTANCE_KEY = ["map", "seed", "m", "obstacle_pct", "semantics"]
ERROR_RESULT = "error"


@dataclass(frozen=True)
class InstanceSpec:
    map: str
    seed: int
    m: int
    obstacle_pct: float
    semantics: str


@dataclass
class RunRecord:
    algorithm: str
    map: str
    seed: int
    m: int
    obstacle_pct: float
    semantics: str
    result: str
    runtime_s: float
    flowtime: Optional[int] = None
    makespan: Optional[int] = None
    hl_expansions: int = 0
    ll_expansions: int = 0

    def __post_init__(self) -> None:
        solved = self.result == SolveResult.SOLVED.value
        if solved != (self.flowtime is not None and self.makespan is not None):
            raise ValueError("flowtime and makespan must be present iff solved")

    @classmethod
    def from_outcome(
        cls, algorithm: str, spec: InstanceSpec, outcome: SolveOutcome
    ) -> RunRecord:
        return cls(
            algorithm=algorithm,
            map=spec.map,
            seed=spec.seed,
            m=spec.m,
            obstacle_pct=spec.obstacle_pct,
            semantics=spec.semantics,
            result=outcome.result.value,
            runtime_s=outcome.stats.runtime,
            flowtime=outcome.flowtime,
            makespan=outcome.makespan,
            hl_expansions=outcome.stats.high_level_expansions,
            ll_expansions=outcome.stats.low_level_expansions,
        )


def run_algorithm(
    algorithm: str,
    instance: Instance,
    timeout: Optional[float] = None,
    seed: int = 0,
    order: Optional[Sequence[int]] = None,
    rnd_runs: Optional[int] = None,
    config: Optional[Config] = None,
) -> SolveOutcome:
    """Run one named algorithm. ``order`` (0-based, highest first) fixes the
    total ordering of ``fix`` and seeds ``pbs`` with it."""
    config = config or get_config()
    name = algorithm.lower()
    if name == "cbs":
        return solve_cbs(instance, CBSMode.PLAIN, timeout, config=config)
    if name == "cbswp":
        return solve_cbs(instance, CBSMode.WITH_PRIORITIES, timeout, config=config)
    if name == "pbs":
        initial = PriorityOrdering.total(order) if order is not None else None
        return solve_pbs(instance, initial, timeout, config=config)
    if name in ("fix", "lh", "sh"):
        if name == "fix":
            strategy = OrderingStrategy.fixed(
                order if order is not None else range(instance.num_agents)
            )
        elif name == "lh":
            strategy = OrderingStrategy.longest_first()
        else:
            strategy = OrderingStrategy.shortest_first()
        return solve_pbs(
            instance, build_total_ordering(instance, strategy), timeout, config=config
        )
    if name == "rnd":
        runs = rnd_runs if rnd_runs is not None else config.rnd_runs
        return solve_rnd(instance, runs, timeout, seed, config=config)
    raise ConfigurationError(f"unknown algorithm '{algorithm}'; choose from {ALGORITHMS}")


def build_instances(config: BenchConfig) -> list[tuple[InstanceSpec, Instance]]:
    """Instances of a sweep in deterministic config order."""
    semantics = config.semantics
    built: list[tuple[InstanceSpec, Instance]] = []
    if config.source == "generator":
        generate = (
            generate_wellformed_instance if config.well_formed else generate_random_instance
        )
        label = f"random-{config.width}x{config.height}" + ("-wf" if config.well_formed else "")
        for pct in config.obstacle_pct:
            for m in config.agents:
                for seed in config.seeds:
                    try:
                        instance = generate(
                            config.width, config.height, pct, m, seed, semantics
                        )
                    except OrdoError as e:
                        raise ConfigurationError(str(e)) from e
                    built.append(
                        (InstanceSpec(label, seed, m, pct, semantics.value), instance)
                    )
        return built

    assert config.map is not None
    try:
        grid = parse_map(Path(config.map).read_text(encoding="utf-8"))
        scen_texts = [Path(s).read_text(encoding="utf-8") for s in config.scen]
    except (OSError, OrdoError) as e:
        raise ConfigurationError(str(e)) from e
    map_name = Path(config.map).name
    obstacle_pct = 100.0 * len(grid.blocked) / (grid.width * grid.height)
    graph = None
    for position, text in enumerate(scen_texts):
        for m in config.agents:
            try:
                instance = parse_scen(text, grid, m, semantics, graph=graph, name=map_name)
            except OrdoError as e:
                raise ConfigurationError(f"{config.scen[position]}: {e}") from e
            graph = instance.graph
            spec = InstanceSpec(map_name, position, m, round(obstacle_pct, 2), semantics.value)
            built.append((spec, instance))
    return built


def _run_one(
    algorithm: str,
    spec: InstanceSpec,
    instance: Instance,
    config: BenchConfig,
    solver_config: Config,
) -> RunRecord:
    try:
        outcome = run_algorithm(
            algorithm,
            instance,
            timeout=config.timeout,
            seed=spec.seed,
            rnd_runs=config.rnd_runs,
            config=solver_config,
        )
    except OrdoError as e:
        logger.warning("%s on %s failed: %s", algorithm, spec, e)
        return _error_record(algorithm, spec)
    except Exception:
        # every job yields a row
        logger.exception("%s on %s raised", algorithm, spec)
        return _error_record(algorithm, spec)
    limit = time_limit(algorithm, config)
    grace = get_settings().GRACE_SECONDS
    if outcome.stats.runtime > limit + grace:
        logger.warning(
            "%s on %s ran %.2fs, over its %.2fs limit plus %.2fs grace",
            algorithm,
            spec,
            outcome.stats.runtime,
            limit,
            grace,
        )
    return RunRecord.from_outcome(algorithm, spec, outcome)


def _error_record(algorithm: str, spec: InstanceSpec) -> RunRecord:
    return RunRecord(
        algorithm=algorithm, result=ERROR_RESULT, runtime_s=0.0, **asdict(spec)
    )


def time_limit(algorithm: str, config: BenchConfig) -> float:
    """Wall-clock limit of one run; RND gets the full timeout for each of its runs."""
    if algorithm.lower() == "rnd":
        return config.timeout * config.rnd_runs
    return config.timeout


def run_experiment(
    config: BenchConfig,
    out: Optional[Union[str, Path]] = None,
    threads: Optional[int] = None,
    solver_config: Optional[Config] = None,
) -> list[RunRecord]:
    """One record per (instance, algorithm), in config order whatever the
    completion order of the workers. Writes the CSV when ``out`` is given."""
    solver_config = solver_config or get_config()
    instances = build_instances(config)
    jobs = [(a, spec, inst) for spec, inst in instances for a in config.algorithms]
    workers = threads or get_settings().THREADS or 1
    logger.info(
        "Running %d jobs (%d instances x %d algorithms) on %d worker(s)",
        len(jobs),
        len(instances),
        len(config.algorithms),
        workers,
    )
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        records = list(
            pool.map(lambda job: _run_one(*job, config, solver_config), jobs)
        )
    if out is not None:
        write_csv(records, out)
    return records


def records_to_frame(records: Iterable[RunRecord]) -> pd.DataFrame:
    return pd.DataFrame([asdict(r) for r in records], columns=CSV_COLUMNS).astype(
        {"flowtime": "Int64", "makespan": "Int64"}
    )


def frame_to_records(frame: pd.DataFrame) -> list[RunRecord]:
    missing = [c for c in CSV_COLUMNS if c not in frame.columns]
    if missing:
        raise ConfigurationError(f"CSV lacks columns {missing}")
    records = []
    for row in frame[CSV_COLUMNS].itertuples(index=False):
        values = row._asdict()
        for key in ("flowtime", "makespan"):
            values[key] = None if pd.isna(values[key]) else int(values[key])
        records.append(RunRecord(**values))
    return records


def write_csv(records: Iterable[RunRecord], path: Union[str, Path]) -> None:
    records_to_frame(records).to_csv(path, index=False)
    logger.info("Wrote %s", path)


def read_csv(path: Union[str, Path]) -> list[RunRecord]:
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except (OSError, pd.errors.ParserError) as e:
        raise ConfigurationError(str(e), str(path)) from e
    return frame_to_records(frame)


@dataclass
class AggregateRow:
    algorithm: str
    m: int
    instances: int
    solved: int
    success_rate: float
    common_instances: int
    mean_flowtime: Optional[float]
    mean_hl_expansions: Optional[float]
    mean_ll_expansions: Optional[float]
    mean_runtime_s: float


def _commonly_solved(frame: pd.DataFrame, comparison_set: Sequence[str]) -> set[tuple]:
    solved = frame[
        (frame["result"] == SolveResult.SOLVED.value)
        & frame["algorithm"].isin(comparison_set)
    ]
    counts = solved.groupby(INSTANCE_KEY)["algorithm"].nunique()
    return set(counts[counts == len(set(comparison_set))].index)


def aggregate(
    records: Iterable[RunRecord],
    comparison_set: Optional[Sequence[str]] = None,
    timeout: Optional[float] = None,
) -> list[AggregateRow]:
    """Per (algorithm, m) summary.

    Success rates use every instance. Flowtime and expansion means use only the
    instances solved by every algorithm of ``comparison_set`` (default: all
    algorithms present) and are None when that set is empty. When ``timeout``
    is given, runs that did not finish in time count with the full timeout in
    ``mean_runtime_s``.
    """
    frame = records_to_frame(records)
    if frame.empty:
        return []
    algorithms = list(comparison_set) if comparison_set else sorted(frame["algorithm"].unique())
    common = _commonly_solved(frame, algorithms)
    keys = list(frame[INSTANCE_KEY].itertuples(index=False, name=None))
    frame["common"] = [k in common for k in keys]
    runtime = frame["runtime_s"].astype(float)
    if timeout is not None:
        timed_out = frame["result"] == SolveResult.TIMEOUT.value
        runtime = runtime.where(~timed_out, timeout)
    frame["runtime_eff"] = runtime

    rows: list[AggregateRow] = []
    for (algorithm, m), group in frame.groupby(["algorithm", "m"], sort=True):
        solved = int((group["result"] == SolveResult.SOLVED.value).sum())
        shared = group[group["common"] & (group["result"] == SolveResult.SOLVED.value)]
        has_means = not shared.empty
        rows.append(
            AggregateRow(
                algorithm=str(algorithm),
                m=int(m),
                instances=len(group),
                solved=solved,
                success_rate=solved / len(group),
                common_instances=len(shared),
                mean_flowtime=float(shared["flowtime"].astype(float).mean()) if has_means else None,
                mean_hl_expansions=float(shared["hl_expansions"].mean()) if has_means else None,
                mean_ll_expansions=float(shared["ll_expansions"].mean()) if has_means else None,
                mean_runtime_s=float(group["runtime_eff"].mean()),
            )
        )
    return rows


def aggregate_frame(rows: Iterable[AggregateRow]) -> pd.DataFrame:
    return pd.DataFrame([asdict(r) for r in rows])


def flowtime_ratios(records: Iterable[RunRecord], reference: str) -> pd.DataFrame:
    """Mean flowtime ratio of each algorithm to ``reference`` per agent count,
    over the instances both of them solved."""
    frame = records_to_frame(records)
    solved = frame[frame["result"] == SolveResult.SOLVED.value]
    ref = solved[solved["algorithm"] == reference][INSTANCE_KEY + ["flowtime"]]
    ref = ref.rename(columns={"flowtime": "reference_flowtime"})
    others = solved[solved["algorithm"] != reference]
    merged = others.merge(ref, on=INSTANCE_KEY, how="inner")
    columns = ["algorithm", "m", "instances", "mean_ratio", "max_ratio"]
    if merged.empty:
        return pd.DataFrame(columns=columns)
    merged["ratio"] = merged["flowtime"].astype(float) / merged[
        "reference_flowtime"
    ].astype(float).where(merged["reference_flowtime"] > 0)
    summary = (
        merged.groupby(["algorithm", "m"], sort=True)["ratio"]
        .agg(instances="count", mean_ratio="mean", max_ratio="max")
        .reset_index()
    )
    return summary[columns]
