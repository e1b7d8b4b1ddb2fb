"""Exact Pareto fronts by exhaustive enumeration.

Tardiness depends only on the sequence, so each permutation's tardiness is
computed once and combined with the savings of every pairing.  A first scan
finds the best savings achievable at each tardiness value; a second collects
every (sequence, pairing) witness of the surviving points.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .domain import (
    JobInstance,
    ObjectiveVector,
    Solution,
    batch_total_savings,
    batch_total_tardiness,
    completion_day,
)
from .pairing import enumerate_pairings, greedy_pairing

DEFAULT_ENUMERATION_LIMIT = 10

ProgressFn = Callable[[float], None]


@dataclass(frozen=True)
class ExactFront:
    """All non-dominated solutions plus their distinct objective points."""

    solutions: tuple[Solution, ...]
    objective_points: tuple[ObjectiveVector, ...]


def enumerate_front(
    instance: JobInstance,
    limit_n: int = DEFAULT_ENUMERATION_LIMIT,
    progress: ProgressFn | None = None,
) -> ExactFront:
    """Exact front over every permutation and every valid pairing."""
    _check_size(instance.n, limit_n)
    pairings = enumerate_pairings(instance.n)

    def all_savings(perms: np.ndarray) -> np.ndarray:
        return batch_total_savings(perms, pairings, instance.savings)

    def witnesses(perms: np.ndarray, row: int, col: int, t: int, c: int) -> list[Solution]:
        sequence = tuple(int(x) for x in perms[row])
        return [Solution(sequence, pairings[col], ObjectiveVector(t, c))]

    return _scan_front(instance, all_savings, witnesses, len(pairings), progress)


def greedy_front(
    instance: JobInstance,
    limit_n: int = DEFAULT_ENUMERATION_LIMIT,
    progress: ProgressFn | None = None,
) -> ExactFront:
    """Front over every permutation when each uses its greedy pairing only."""
    _check_size(instance.n, limit_n)

    def greedy_savings(perms: np.ndarray) -> np.ndarray:
        return _greedy_savings_per_row(perms, instance.savings.entries)[:, None]

    def witnesses(perms: np.ndarray, row: int, col: int, t: int, c: int) -> list[Solution]:
        sequence = tuple(int(x) for x in perms[row])
        pairing = greedy_pairing(sequence, instance.savings)
        return [Solution(sequence, pairing, ObjectiveVector(t, c))]

    return _scan_front(instance, greedy_savings, witnesses, 1, progress)


# --------------------------------------------------------------------------
# shared scan machinery
# --------------------------------------------------------------------------

def _check_size(n: int, limit_n: int) -> None:
    if n > limit_n:
        raise ValueError(
            f"refusing to enumerate n={n} permutations; the enumeration bound "
            f"is n <= {limit_n}"
        )


def _permutation_chunks(n: int, chunk_size: int):
    stream = itertools.permutations(range(1, n + 1))
    while True:
        block = list(itertools.islice(stream, chunk_size))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def _scan_front(
    instance: JobInstance,
    savings_of: Callable[[np.ndarray], np.ndarray],
    witnesses: Callable[[np.ndarray, int, int, int, int], list[Solution]],
    n_columns: int,
    progress: ProgressFn | None,
) -> ExactFront:
    n = instance.n
    total = math.factorial(n)
    chunk_size = max(2520, -(-total // 50))
    total_minutes = int(instance.processing_by_id.sum())
    max_t = n * completion_day(total_minutes, instance.workday_minutes)

    done = 0

    def report(rows: int) -> None:
        nonlocal done
        done += rows
        if progress is not None:
            progress(done / (2 * total))

    # Scan 1: best savings at each tardiness value.
    best_c = np.full(max_t + 1, -1, dtype=np.int64)
    for perms in _permutation_chunks(n, chunk_size):
        t = batch_total_tardiness(perms, instance)
        c = savings_of(perms)
        np.maximum.at(best_c, t, c.max(axis=1))
        report(perms.shape[0])

    # Keep only points not dominated by a lower-tardiness point.
    target = np.full(max_t + 1, -1, dtype=np.int64)
    prefix = -1
    points: list[ObjectiveVector] = []
    for t in range(max_t + 1):
        if best_c[t] > prefix:
            target[t] = best_c[t]
            points.append(ObjectiveVector(int(t), int(best_c[t])))
            prefix = int(best_c[t])

    # Scan 2: collect every witness of a surviving point.
    found: list[Solution] = []
    for perms in _permutation_chunks(n, chunk_size):
        t = batch_total_tardiness(perms, instance)
        c = savings_of(perms)
        wanted = target[t]
        for col in range(n_columns):
            for row in np.flatnonzero(c[:, col] == wanted):
                found.extend(
                    witnesses(perms, int(row), col, int(t[row]), int(c[row, col]))
                )
        report(perms.shape[0])

    found.sort(key=lambda s: (s.sequence, s.pairing.pairs))
    return ExactFront(solutions=tuple(found), objective_points=tuple(points))


def _greedy_savings_per_row(perms: np.ndarray, entries: np.ndarray) -> np.ndarray:
    """Greedy-pairing savings of each row, matching greedy_pairing's tie rule."""
    rows, n = perms.shape
    adjacent = entries[perms[:, :-1] - 1, perms[:, 1:] - 1]
    usable = np.ones((rows, n - 1), dtype=bool)
    totals = np.zeros(rows, dtype=np.int64)
    for _ in range(n // 2):
        masked = np.where(usable, adjacent, -1)
        starts = masked.argmax(axis=1)  # first maximum = smallest start
        values = masked[np.arange(rows), starts]
        active = np.flatnonzero(values >= 0)
        if active.size == 0:
            break
        totals[active] += values[active]
        for offset in (-1, 0, 1):
            cols = starts[active] + offset
            ok = (cols >= 0) & (cols < n - 1)
            usable[active[ok], cols[ok]] = False
    return totals
