"""Single-machine scheduling with paired jobs: two objectives, one search.

Sequences of jobs are scored by total tardiness (minimized) and by the
material savings of pairing adjacently sequenced jobs (maximized).  The
package provides exact enumeration, a stochastic multiobjective search, and
benchmarking utilities around both.
"""

from .bench import ExperimentSpec, ExperimentSummary, RunRecovery, random_instance, run_experiment
from .cli import (
    bundled_instance_path,
    load_problem,
    notation,
    parse_notation,
    resolve_problem,
    write_front_csv,
)
from .domain import (
    Job,
    JobInstance,
    ObjectiveVector,
    SavingsMatrix,
    Solution,
    completion_day,
    evaluate,
    make_solution,
    parse_duration,
    total_savings,
    total_tardiness,
)
from .operators import (
    OPERATOR_NAMES,
    OperatorParams,
    RandomSource,
    candidates,
    make_rng,
    reverse_window,
    shift,
    swap,
    symmetry,
)
from .oracle import DEFAULT_ENUMERATION_LIMIT, ExactFront, enumerate_front, greedy_front
from .pairing import Pairing, PairingCounts, count_pairings, enumerate_pairings, greedy_pairing
from .pareto import (
    DominationRecord,
    ParetoArchive,
    dominates,
    domination_counts,
    select_best,
)
from .solver import RunResult, SolverConfig, run

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "DominationRecord",
    "ExactFront",
    "ExperimentSpec",
    "ExperimentSummary",
    "Job",
    "JobInstance",
    "OPERATOR_NAMES",
    "ObjectiveVector",
    "OperatorParams",
    "Pairing",
    "PairingCounts",
    "ParetoArchive",
    "RandomSource",
    "RunRecovery",
    "RunResult",
    "SavingsMatrix",
    "Solution",
    "SolverConfig",
    "bundled_instance_path",
    "candidates",
    "completion_day",
    "count_pairings",
    "dominates",
    "domination_counts",
    "enumerate_front",
    "enumerate_pairings",
    "evaluate",
    "greedy_front",
    "greedy_pairing",
    "load_problem",
    "make_rng",
    "make_solution",
    "notation",
    "parse_duration",
    "parse_notation",
    "random_instance",
    "resolve_problem",
    "reverse_window",
    "run",
    "run_experiment",
    "select_best",
    "shift",
    "swap",
    "symmetry",
    "total_savings",
    "total_tardiness",
    "write_front_csv",
]
