"""Recovery experiments: how much of the exact front do seeded runs find?

A run's recovery is the fraction of the oracle's objective points present in
its archive; a run is complete when it finds them all.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .domain import Job, JobInstance, ObjectiveVector, SavingsMatrix
from .operators import OperatorParams, make_rng
from .oracle import ExactFront, ProgressFn, enumerate_front
from .solver import SolverConfig, run


@dataclass(frozen=True)
class ExperimentSpec:
    """An instance, the seeds to run, and the per-run iteration budget."""

    instance: JobInstance
    seeds: tuple[int, ...]
    iterations: int
    operator_params: OperatorParams = field(default_factory=OperatorParams)

    def __post_init__(self) -> None:
        if not self.seeds:
            raise ValueError("an experiment needs at least one seed")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError(f"seeds must be distinct, got {self.seeds}")


@dataclass(frozen=True)
class RunRecovery:
    """Per-run score against the oracle front."""

    seed: int
    recovered_points: int
    recovery: float
    complete: bool
    evaluations: int
    wall_time_ms: float


@dataclass(frozen=True)
class ExperimentSummary:
    runs: tuple[RunRecovery, ...]
    oracle_points: tuple[ObjectiveVector, ...]
    mean_recovery: float
    min_recovery: float
    complete_runs: int


def run_experiment(
    spec: ExperimentSpec,
    front: ExactFront | None = None,
    progress: ProgressFn | None = None,
) -> ExperimentSummary:
    """Run the search once per seed and score archives against the exact front.

    The oracle front is computed here unless a precomputed one is passed in.
    """
    if front is None:
        front = enumerate_front(spec.instance, limit_n=spec.instance.n, progress=progress)
    oracle_points = set(front.objective_points)
    records = []
    for seed in spec.seeds:
        config = SolverConfig(
            iterations=spec.iterations, seed=seed, operator_params=spec.operator_params
        )
        result = run(spec.instance, config)
        found = oracle_points.intersection(result.archive.objective_points())
        recovery = len(found) / len(oracle_points)
        records.append(
            RunRecovery(
                seed=seed,
                recovered_points=len(found),
                recovery=recovery,
                complete=len(found) == len(oracle_points),
                evaluations=result.evaluations,
                wall_time_ms=result.wall_time_ms,
            )
        )
    recoveries = [r.recovery for r in records]
    return ExperimentSummary(
        runs=tuple(records),
        oracle_points=front.objective_points,
        mean_recovery=sum(recoveries) / len(recoveries),
        min_recovery=min(recoveries),
        complete_runs=sum(r.complete for r in records),
    )


def random_instance(
    n: int,
    seed: int,
    due_range: tuple[int, int] = (1, 15),
    processing_range: tuple[int, int] = (60, 1500),
    savings_range: tuple[int, int] = (0, 500),
    workday_minutes: int = 480,
) -> JobInstance:
    """Deterministic random instance; ranges are inclusive, savings in hundredths."""
    if n < 2:
        raise ValueError(f"need at least two jobs, got n={n}")
    for name, (lo, hi) in (
        ("due", due_range),
        ("processing", processing_range),
        ("savings", savings_range),
    ):
        if lo > hi:
            raise ValueError(f"empty {name} range ({lo}, {hi})")
    rng = make_rng(seed)
    jobs = tuple(
        Job(
            id=k + 1,
            due_days=int(rng.integers(due_range[0], due_range[1] + 1)),
            processing_minutes=int(rng.integers(processing_range[0], processing_range[1] + 1)),
        )
        for k in range(n)
    )
    upper = rng.integers(savings_range[0], savings_range[1] + 1, size=(n, n))
    matrix = np.triu(upper, k=1)
    matrix = matrix + matrix.T
    return JobInstance(
        jobs=jobs, savings=SavingsMatrix(matrix), workday_minutes=workday_minutes
    )
