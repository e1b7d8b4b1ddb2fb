"""Problem data and objective evaluation for paired-job schedules.

Jobs run back to back on one machine in sequence order.  A job's completion
day is the calendar day (counted in whole workdays) on which its processing
finishes, and tardiness is measured in whole days past the due day.  Pairing
two adjacently sequenced jobs saves material; savings are tracked in exact
hundredths of a cost unit so all arithmetic stays integral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .pairing import Pairing

_DURATION = re.compile(r"^(\d+):([0-5]\d)$")


def parse_duration(text: str) -> int:
    """Convert an "H:MM" duration to whole minutes.

    Hours may have any number of digits; minutes must be two digits below 60.
    """
    match = _DURATION.match(text)
    if match is None:
        raise ValueError(
            f"invalid duration {text!r}: expected H:MM with minutes in 00..59"
        )
    hours, minutes = int(match.group(1)), int(match.group(2))
    return hours * 60 + minutes


def completion_day(cumulative_minutes: int, workday_minutes: int) -> int:
    """Day on which a job finishing at the given cumulative minute completes."""
    if workday_minutes <= 0:
        raise ValueError(f"workday must be positive, got {workday_minutes} minutes")
    if cumulative_minutes < 0:
        raise ValueError(f"cumulative minutes may not be negative: {cumulative_minutes}")
    return -(-cumulative_minutes // workday_minutes)


# --------------------------------------------------------------------------
# data types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Job:
    """One job: 1-based id, due day, and processing time in minutes."""

    id: int
    due_days: int
    processing_minutes: int

    def __post_init__(self) -> None:
        if self.id < 1:
            raise ValueError(f"job id must be >= 1, got {self.id}")
        if self.due_days < 0:
            raise ValueError(f"job {self.id}: due day may not be negative")
        if self.processing_minutes < 0:
            raise ValueError(f"job {self.id}: processing time may not be negative")


class SavingsMatrix:
    """Symmetric job-pair savings in hundredths, zero on the diagonal."""

    def __init__(self, entries: np.ndarray | list[list[int]]):
        arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"savings matrix must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if (arr < 0).any():
            i, j = map(int, np.argwhere(arr < 0)[0] + 1)
            raise ValueError(f"savings[{i}][{j}] is negative")
        diag = np.flatnonzero(np.diagonal(arr))
        if diag.size:
            i = int(diag[0]) + 1
            raise ValueError(f"savings[{i}][{i}] must be zero on the diagonal")
        bad = np.argwhere(arr != arr.T)
        if bad.size:
            i, j = map(int, bad[0] + 1)
            raise ValueError(
                f"savings matrix is asymmetric: savings[{i}][{j}] != savings[{j}][{i}]"
            )
        self._entries = arr
        self._entries.setflags(write=False)
        self.n = n

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def between(self, job_i: int, job_j: int) -> int:
        """Savings (hundredths) from pairing jobs ``job_i`` and ``job_j``."""
        return int(self._entries[job_i - 1, job_j - 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SavingsMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SavingsMatrix(n={self.n})"


@dataclass(frozen=True, eq=False)
class JobInstance:
    """A complete problem: jobs (ordered by id), savings, workday length."""

    jobs: tuple[Job, ...]
    savings: SavingsMatrix
    workday_minutes: int = 480

    def __post_init__(self) -> None:
        ids = [job.id for job in self.jobs]
        if ids != list(range(1, len(ids) + 1)):
            raise ValueError(f"job ids must be exactly 1..{len(ids)} in order, got {ids}")
        if self.savings.n != len(ids):
            raise ValueError(
                f"savings matrix is {self.savings.n}x{self.savings.n} "
                f"but there are {len(ids)} jobs"
            )
        if self.workday_minutes <= 0:
            raise ValueError("workday must be a positive number of minutes")

    @property
    def n(self) -> int:
        return len(self.jobs)

    @cached_property
    def processing_by_id(self) -> np.ndarray:
        """Processing minutes indexed by job id - 1 (read-only)."""
        arr = np.array([job.processing_minutes for job in self.jobs], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def due_by_id(self) -> np.ndarray:
        """Due days indexed by job id - 1 (read-only)."""
        arr = np.array([job.due_days for job in self.jobs], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JobInstance):
            return NotImplemented
        return (
            self.jobs == other.jobs
            and self.savings == other.savings
            and self.workday_minutes == other.workday_minutes
        )


@dataclass(frozen=True)
class ObjectiveVector:
    """Objective pair: total tardiness in days, total savings in hundredths."""

    tardiness: int
    savings: int


@dataclass(frozen=True)
class Solution:
    """A job sequence with its pairing and evaluated objectives."""

    sequence: tuple[int, ...]
    pairing: Pairing
    objectives: ObjectiveVector


# --------------------------------------------------------------------------
# evaluation
# --------------------------------------------------------------------------

def _check_sequence(sequence: tuple[int, ...], n: int) -> None:
    if sorted(sequence) != list(range(1, n + 1)):
        raise ValueError(f"sequence {sequence} is not a permutation of 1..{n}")


def total_tardiness(sequence: tuple[int, ...], instance: JobInstance) -> int:
    """Total whole-day tardiness of the sequence; pairing plays no part."""
    _check_sequence(sequence, instance.n)
    cumulative = 0
    tardiness = 0
    for job_id in sequence:
        job = instance.jobs[job_id - 1]
        cumulative += job.processing_minutes
        day = completion_day(cumulative, instance.workday_minutes)
        tardiness += max(0, day - job.due_days)
    return tardiness


def total_savings(
    sequence: tuple[int, ...], pairing: Pairing, savings: SavingsMatrix
) -> int:
    """Summed savings (hundredths) of the jobs sitting in paired positions."""
    _check_sequence(sequence, savings.n)
    pairing.validate_for(len(sequence))
    return sum(
        savings.between(sequence[a - 1], sequence[b - 1]) for a, b in pairing.pairs
    )


def evaluate(
    sequence: tuple[int, ...], pairing: Pairing, instance: JobInstance
) -> ObjectiveVector:
    """Evaluate both objectives for a sequence with a pairing."""
    return ObjectiveVector(
        tardiness=total_tardiness(sequence, instance),
        savings=total_savings(sequence, pairing, instance.savings),
    )


def make_solution(
    sequence: tuple[int, ...], pairing: Pairing, instance: JobInstance
) -> Solution:
    """Bundle a sequence and pairing with freshly evaluated objectives."""
    return Solution(tuple(sequence), pairing, evaluate(tuple(sequence), pairing, instance))


# --------------------------------------------------------------------------
# batched evaluation over arrays of sequences
# --------------------------------------------------------------------------

def batch_total_tardiness(perms: np.ndarray, instance: JobInstance) -> np.ndarray:
    """Total tardiness for each row of ``perms`` (rows are job-id sequences)."""
    minutes = instance.processing_by_id[perms - 1]
    cumulative = minutes.cumsum(axis=1)
    days = (cumulative + instance.workday_minutes - 1) // instance.workday_minutes
    late = days - instance.due_by_id[perms - 1]
    return np.maximum(late, 0).sum(axis=1)


def batch_total_savings(
    perms: np.ndarray, pairings: tuple[Pairing, ...], savings: SavingsMatrix
) -> np.ndarray:
    """Savings of each row of ``perms`` under each pairing.

    Returns an array of shape (rows, len(pairings)).
    """
    out = np.zeros((perms.shape[0], len(pairings)), dtype=np.int64)
    for j, pairing in enumerate(pairings):
        if not pairing.pairs:
            continue
        a = np.array([a - 1 for a, _ in pairing.pairs])
        b = np.array([b - 1 for _, b in pairing.pairs])
        out[:, j] = savings.entries[perms[:, a] - 1, perms[:, b] - 1].sum(axis=1)
    return out
