"""Multiobjective state-transition search over sequences and pairings.

Each iteration applies the swap, shift, and symmetry operators in turn to the
incumbent sequence.  Every candidate sequence is evaluated under every valid
pairing; the least-dominated of those solutions becomes the new incumbent and
all non-dominated ones are offered to the Pareto archive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .domain import (
    JobInstance,
    ObjectiveVector,
    Solution,
    batch_total_savings,
    batch_total_tardiness,
    make_solution,
)
from .operators import OPERATOR_NAMES, OperatorParams, candidates, make_rng
from .pairing import enumerate_pairings
from .pareto import ParetoArchive, domination_count_arrays


@dataclass(frozen=True)
class SolverConfig:
    """Iteration budget, seed, and operator parameters for one run."""

    iterations: int = 100
    seed: int = 0
    operator_params: OperatorParams = field(default_factory=OperatorParams)

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")


@dataclass
class RunResult:
    """Archive and bookkeeping from one solver run.

    Equal instances and configs reproduce the archive and evaluation count
    exactly; wall time is measurement metadata and naturally varies.
    """

    archive: ParetoArchive
    evaluations: int
    wall_time_ms: float


def run(instance: JobInstance, config: SolverConfig = SolverConfig()) -> RunResult:
    """Run the search and return the archive of non-dominated solutions."""
    n = instance.n
    if n < 2:
        raise ValueError(f"search needs at least 2 jobs, got n={n}")
    started = time.perf_counter()
    rng = make_rng(config.seed)
    pairings = enumerate_pairings(n)
    n_pairings = len(pairings)

    best_sequence = tuple(int(x) for x in rng.permutation(n) + 1)
    best_pairing = pairings[int(rng.integers(0, n_pairings))]

    archive = ParetoArchive()
    archive.update(make_solution(best_sequence, best_pairing, instance))

    evaluations = 0
    for _ in range(config.iterations):
        for op in OPERATOR_NAMES:
            pool = candidates(best_sequence, op, config.operator_params, rng)
            perms = np.array(pool, dtype=np.int64)
            tardiness = batch_total_tardiness(perms, instance)
            savings = batch_total_savings(perms, pairings, instance.savings)
            evaluations += savings.size

            # Flatten to one solution per (candidate, pairing) combination.
            pool_t = np.repeat(tardiness, n_pairings)
            pool_c = savings.ravel()
            counts = domination_count_arrays(pool_t, pool_c)

            non_dominated = np.flatnonzero(counts == 0)
            solutions = {}
            for flat in non_dominated:
                sequence = pool[flat // n_pairings]
                pairing = pairings[flat % n_pairings]
                solution = Solution(
                    sequence,
                    pairing,
                    ObjectiveVector(int(pool_t[flat]), int(pool_c[flat])),
                )
                solutions[int(flat)] = solution
                archive.update(solution)

            pick = int(non_dominated[rng.integers(0, len(non_dominated))])
            chosen = solutions[pick]
            best_sequence, best_pairing = chosen.sequence, chosen.pairing

    wall_ms = (time.perf_counter() - started) * 1000.0
    return RunResult(archive=archive, evaluations=evaluations, wall_time_ms=wall_ms)
