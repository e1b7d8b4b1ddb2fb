"""Command-line interface: solve, enumerate, greedy, pairs, and bench.

Problem instances are JSON files with jobs, a symmetric savings matrix in
two-decimal cost units, and an optional workday length in hours.  Results
print to stdout in the compact solution notation "(2-5)-(1-4)-3", where
parentheses mark paired jobs; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
import time
from dataclasses import dataclass
from decimal import Decimal
from importlib import resources
from pathlib import Path
from typing import Sequence

from .bench import ExperimentSpec, run_experiment
from .domain import Job, JobInstance, SavingsMatrix, Solution, parse_duration
from .operators import OperatorParams
from .oracle import DEFAULT_ENUMERATION_LIMIT, enumerate_front, greedy_front
from .pairing import Pairing, count_pairings, enumerate_pairings
from .solver import SolverConfig, run

ENUM_LIMIT_ENV = "PAIRSCHED_ENUM_LIMIT"

BUNDLED_INSTANCES = ("example1", "example2")


# --------------------------------------------------------------------------
# problem files
# --------------------------------------------------------------------------

def bundled_instance_path(name: str) -> Path:
    """Filesystem path of a problem file shipped with the package."""
    if name not in BUNDLED_INSTANCES:
        raise ValueError(
            f"unknown bundled instance {name!r}; available: {', '.join(BUNDLED_INSTANCES)}"
        )
    return Path(str(resources.files("pairsched").joinpath("data", f"{name}.json")))


def resolve_problem(name: str) -> Path:
    """Treat the argument as a path if it exists, else as a bundled name."""
    path = Path(name)
    if path.exists():
        return path
    if name in BUNDLED_INSTANCES:
        return bundled_instance_path(name)
    raise ValueError(f"problem file {name!r} not found")


def _savings_hundredths(value: object, row: int, col: int) -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value * 100
    if isinstance(value, Decimal):
        scaled = value.scaleb(2)
        if scaled != scaled.to_integral_value():
            raise ValueError(
                f"savings[{row}][{col}] = {value} has more than two decimal places"
            )
        return int(scaled)
    raise ValueError(f"savings[{row}][{col}] must be a number, got {value!r}")


def load_problem(path: str | Path) -> JobInstance:
    """Read and validate a JSON problem file."""
    text = Path(path).read_text()
    try:
        data = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object at the top level")
    for field_name in ("jobs", "savings"):
        if field_name not in data:
            raise ValueError(f"{path}: missing required field {field_name!r}")

    workday_hours = data.get("workday_hours", 8)
    if not isinstance(workday_hours, int) or workday_hours <= 0:
        raise ValueError(f"{path}: workday_hours must be a positive integer")

    jobs = []
    for k, entry in enumerate(data["jobs"], start=1):
        for key in ("id", "due_days", "processing"):
            if key not in entry:
                raise ValueError(f"{path}: job entry {k} is missing field {key!r}")
        jobs.append(
            Job(
                id=entry["id"],
                due_days=entry["due_days"],
                processing_minutes=parse_duration(entry["processing"]),
            )
        )
    jobs.sort(key=lambda job: job.id)

    raw = data["savings"]
    n = len(jobs)
    if len(raw) != n:
        raise ValueError(f"{path}: savings matrix has {len(raw)} rows for {n} jobs")
    matrix = []
    for i, row in enumerate(raw, start=1):
        if len(row) != n:
            raise ValueError(f"{path}: savings row {i} has {len(row)} entries, expected {n}")
        matrix.append(
            [_savings_hundredths(v, i, j) for j, v in enumerate(row, start=1)]
        )
    return JobInstance(
        jobs=tuple(jobs),
        savings=SavingsMatrix(matrix),
        workday_minutes=workday_hours * 60,
    )


# --------------------------------------------------------------------------
# solution notation and reports
# --------------------------------------------------------------------------

_NOTATION_TOKEN = re.compile(r"\((\d+)-(\d+)\)|(\d+)")


def notation(sequence: tuple[int, ...], pairing: Pairing) -> str:
    """Render a sequence with its pairing, e.g. "(2-5)-(1-4)-3"."""
    starts = {a for a, _ in pairing.pairs}
    parts = []
    position = 1
    while position <= len(sequence):
        if position in starts:
            parts.append(f"({sequence[position - 1]}-{sequence[position]})")
            position += 2
        else:
            parts.append(str(sequence[position - 1]))
            position += 1
    return "-".join(parts)


def parse_notation(text: str) -> tuple[tuple[int, ...], Pairing]:
    """Inverse of notation(): recover the sequence and pairing."""
    s = text.strip()
    sequence: list[int] = []
    pairs: list[tuple[int, int]] = []
    i = 0
    while i < len(s):
        match = _NOTATION_TOKEN.match(s, i)
        if match is None:
            raise ValueError(f"cannot parse solution notation {text!r} at offset {i}")
        if match.group(3) is not None:
            sequence.append(int(match.group(3)))
        else:
            start = len(sequence) + 1
            sequence.extend((int(match.group(1)), int(match.group(2))))
            pairs.append((start, start + 1))
        i = match.end()
        if i < len(s):
            if s[i] != "-" or i + 1 == len(s):
                raise ValueError(f"cannot parse solution notation {text!r} at offset {i}")
            i += 1
    if not sequence:
        raise ValueError("empty solution notation")
    return tuple(sequence), Pairing(tuple(pairs))


def format_hundredths(value: int) -> str:
    return f"{value // 100}.{value % 100:02d}"


@dataclass(frozen=True)
class FrontRow:
    notation: str
    tardiness: int
    savings: int


@dataclass(frozen=True)
class FrontReport:
    rows: tuple[FrontRow, ...]
    metadata: dict


def front_report(solutions: Sequence[Solution], metadata: dict) -> FrontReport:
    ordered = sorted(
        solutions,
        key=lambda s: (s.objectives.tardiness, s.objectives.savings, s.sequence, s.pairing.pairs),
    )
    rows = tuple(
        FrontRow(
            notation=notation(s.sequence, s.pairing),
            tardiness=s.objectives.tardiness,
            savings=s.objectives.savings,
        )
        for s in ordered
    )
    return FrontReport(rows=rows, metadata=metadata)


def print_front(report: FrontReport, stream=None) -> None:
    stream = stream or sys.stdout
    print("solution, T, C", file=stream)
    for row in report.rows:
        print(f"{row.notation}, {row.tardiness}, {format_hundredths(row.savings)}", file=stream)


def write_front_csv(solutions: Sequence[Solution], path: str | Path) -> None:
    """Export a front as CSV: sequence, pairing, T_days, C_hundredths."""
    ordered = sorted(
        solutions,
        key=lambda s: (s.objectives.tardiness, s.objectives.savings, s.sequence, s.pairing.pairs),
    )
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["sequence", "pairing", "T_days", "C_hundredths"])
        for s in ordered:
            writer.writerow(
                [
                    " ".join(str(j) for j in s.sequence),
                    " ".join(f"{a}-{b}" for a, b in s.pairing.pairs),
                    s.objectives.tardiness,
                    s.objectives.savings,
                ]
            )


def _stderr_progress() -> callable:
    last = -1

    def report(fraction: float) -> None:
        nonlocal last
        pct = int(fraction * 100)
        if pct > last:
            last = pct
            print(f"\rscanning permutations: {pct:3d}%", end="", file=sys.stderr)
            if pct >= 100:
                print(file=sys.stderr)

    return report


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_solve(args: argparse.Namespace) -> int:
    instance = load_problem(resolve_problem(args.problem))
    params = OperatorParams(
        swap_factor=args.ma,
        shift_factor=args.mb,
        symmetry_factor=args.mc,
        search_enforcement=args.se,
    )
    config = SolverConfig(iterations=args.iterations, seed=args.seed, operator_params=params)
    result = run(instance, config)
    metadata = {
        "seed": args.seed,
        "iterations": args.iterations,
        "evaluations": result.evaluations,
        "wall_time_ms": result.wall_time_ms,
    }
    print(
        f"seed={args.seed} iterations={args.iterations} "
        f"evaluations={result.evaluations} wall_time_ms={result.wall_time_ms:.1f}",
        file=sys.stderr,
    )
    report = front_report(result.archive.members, metadata)
    print_front(report)
    if args.out:
        write_front_csv(result.archive.members, args.out)
    return 0


def _enumeration_limit() -> int:
    raw = os.environ.get(ENUM_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_LIMIT
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENUM_LIMIT_ENV} must be an integer, got {raw!r}") from exc


def cmd_enumerate(args: argparse.Namespace) -> int:
    instance = load_problem(resolve_problem(args.problem))
    limit = _enumeration_limit()
    started = time.perf_counter()
    build = greedy_front if args.greedy else enumerate_front
    front = build(instance, limit_n=limit, progress=_stderr_progress())
    wall_ms = (time.perf_counter() - started) * 1000.0
    sequences = math.factorial(instance.n)
    per_sequence = 1 if args.greedy else len(enumerate_pairings(instance.n))
    metadata = {
        "evaluations": sequences * per_sequence,
        "wall_time_ms": wall_ms,
    }
    print(
        f"evaluations={metadata['evaluations']} wall_time_ms={wall_ms:.1f}",
        file=sys.stderr,
    )
    report = front_report(front.solutions, metadata)
    print_front(report)
    if args.out:
        write_front_csv(front.solutions, args.out)
    return 0


def cmd_pairs(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise ValueError(f"pairing counts are defined for n >= 2, got n={args.n}")
    print("n, paired_start, unpaired_start, total")
    for m in range(2, args.n + 1):
        counts = count_pairings(m)
        print(f"{m}, {counts.paired_start}, {counts.unpaired_start}, {counts.total}")
    if args.check:
        upper = min(args.n, 15)
        for m in range(2, upper + 1):
            enumerated = len(enumerate_pairings(m))
            if enumerated != count_pairings(m).total:
                raise ValueError(
                    f"count mismatch at n={m}: recurrence says "
                    f"{count_pairings(m).total}, enumeration found {enumerated}"
                )
        print(f"counts verified against enumeration for n=2..{upper}", file=sys.stderr)
    return 0


def _bench_seeds(args: argparse.Namespace) -> tuple[int, ...]:
    if args.seeds:
        return tuple(int(part) for part in args.seeds.split(","))
    if args.seed_file:
        lines = Path(args.seed_file).read_text().split()
        return tuple(int(line) for line in lines)
    return tuple(range(args.seed, args.seed + args.runs))


def cmd_bench(args: argparse.Namespace) -> int:
    instance = load_problem(resolve_problem(args.problem))
    spec = ExperimentSpec(
        instance=instance,
        seeds=_bench_seeds(args),
        iterations=args.iterations,
    )
    summary = run_experiment(spec, progress=_stderr_progress())
    lines = ["seed,found_points,oracle_points,recovery,complete"]
    oracle_points = len(summary.oracle_points)
    for record in summary.runs:
        lines.append(
            f"{record.seed},{record.recovered_points},{oracle_points},"
            f"{record.recovery:.4f},{int(record.complete)}"
        )
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    print(
        f"mean_recovery={summary.mean_recovery:.4f} "
        f"min_recovery={summary.min_recovery:.4f} "
        f"complete_runs={summary.complete_runs}/{len(summary.runs)}",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairsched",
        description="Search and enumerate tardiness/savings trade-offs for paired job schedules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_problem(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "problem",
            help="problem file path, or a bundled name: " + ", ".join(BUNDLED_INSTANCES),
        )

    p_solve = sub.add_parser("solve", help="run the multiobjective search")
    add_problem(p_solve)
    p_solve.add_argument("--iterations", type=int, default=100, help="search iterations")
    p_solve.add_argument("--seed", type=int, default=0, help="random seed")
    p_solve.add_argument("--se", type=int, default=20, help="candidates per operator step")
    p_solve.add_argument("--ma", type=int, default=2, help="swap factor")
    p_solve.add_argument("--mb", type=int, default=1, help="shift factor")
    p_solve.add_argument("--mc", type=int, default=0, help="symmetry factor")
    p_solve.add_argument("--out", help="also write the front as CSV to this path")
    p_solve.set_defaults(func=cmd_solve)

    p_enum = sub.add_parser("enumerate", help="exact front by exhaustive enumeration")
    add_problem(p_enum)
    p_enum.add_argument(
        "--greedy", action="store_true", help="restrict each sequence to its greedy pairing"
    )
    p_enum.add_argument("--out", help="also write the front as CSV to this path")
    p_enum.set_defaults(func=cmd_enumerate)

    p_greedy = sub.add_parser(
        "greedy", help="exact front with greedy pairings (same as enumerate --greedy)"
    )
    add_problem(p_greedy)
    p_greedy.add_argument("--out", help="also write the front as CSV to this path")
    p_greedy.set_defaults(func=cmd_enumerate, greedy=True)

    p_pairs = sub.add_parser("pairs", help="pairing counts for 2..N")
    p_pairs.add_argument("n", type=int, help="largest sequence length to tabulate")
    p_pairs.add_argument(
        "--check", action="store_true", help="cross-check counts against enumeration"
    )
    p_pairs.set_defaults(func=cmd_pairs)

    p_bench = sub.add_parser("bench", help="repeated seeded runs scored against the exact front")
    add_problem(p_bench)
    p_bench.add_argument("--iterations", type=int, default=100, help="iterations per run")
    p_bench.add_argument("--runs", type=int, default=20, help="number of runs")
    p_bench.add_argument("--seed", type=int, default=0, help="first seed when --seeds is not given")
    p_bench.add_argument("--seeds", help="comma-separated list of seeds")
    p_bench.add_argument("--seed-file", help="file with one seed per line")
    p_bench.add_argument("--out", help="also write the per-run CSV to this path")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
