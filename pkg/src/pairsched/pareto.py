"""Dominance relation, domination counts, and the Pareto archive.

Tardiness is minimized and savings are maximized, so solution a dominates b
when a is no worse on both objectives and strictly better on at least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .domain import ObjectiveVector, Solution
from .operators import RandomSource


def dominates(a: ObjectiveVector, b: ObjectiveVector) -> bool:
    """True when ``a`` is at least as good as ``b`` on both objectives and
    strictly better on one."""
    return (
        a.tardiness <= b.tardiness
        and a.savings >= b.savings
        and (a.tardiness < b.tardiness or a.savings > b.savings)
    )


def domination_count_arrays(tardiness: np.ndarray, savings: np.ndarray) -> np.ndarray:
    """For each point, how many other points dominate it.

    Array counterpart of the pairwise definition above; both inputs are
    parallel 1-D arrays.
    """
    t_col, t_row = tardiness[:, None], tardiness[None, :]
    c_col, c_row = savings[:, None], savings[None, :]
    no_worse = (t_col <= t_row) & (c_col >= c_row)
    strictly_better = (t_col < t_row) | (c_col > c_row)
    return (no_worse & strictly_better).sum(axis=0)


@dataclass(frozen=True)
class DominationRecord:
    """A solution tagged with how many solutions in its set dominate it."""

    solution: Solution
    count: int


def domination_counts(solutions: Sequence[Solution]) -> list[DominationRecord]:
    """Domination count of every solution within the given set."""
    tardiness = np.array([s.objectives.tardiness for s in solutions], dtype=np.int64)
    savings = np.array([s.objectives.savings for s in solutions], dtype=np.int64)
    counts = domination_count_arrays(tardiness, savings)
    return [DominationRecord(s, int(c)) for s, c in zip(solutions, counts)]


def select_best(solutions: Sequence[Solution], rng: RandomSource) -> Solution:
    """Pick a solution with the minimal domination count, ties broken uniformly."""
    if not solutions:
        raise ValueError("cannot select from an empty solution set")
    records = domination_counts(solutions)
    lowest = min(record.count for record in records)
    tied = [record.solution for record in records if record.count == lowest]
    return tied[int(rng.integers(0, len(tied)))]


class ParetoArchive:
    """Mutually non-dominated solutions found so far.

    No member dominates another and no two members share both sequence and
    pairing; solutions with equal objectives but different structure are all
    kept.
    """

    def __init__(self, members: Iterable[Solution] = ()):
        self._members: list[Solution] = []
        for solution in members:
            self.update(solution)

    @property
    def members(self) -> tuple[Solution, ...]:
        return tuple(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParetoArchive):
            return NotImplemented
        return self._members == other._members

    def update(self, candidate: Solution) -> bool:
        """Offer a solution; returns True when it was inserted.

        Members dominated by the candidate are removed.  The candidate is
        inserted unless some member dominates it or a member with the same
        sequence and pairing is already present.  Offering the same solution
        twice leaves the archive unchanged.
        """
        if any(dominates(m.objectives, candidate.objectives) for m in self._members):
            return False
        self._members = [
            m for m in self._members if not dominates(candidate.objectives, m.objectives)
        ]
        for member in self._members:
            if member.sequence == candidate.sequence and member.pairing == candidate.pairing:
                return False
        self._members.append(candidate)
        return True

    def objective_points(self) -> list[ObjectiveVector]:
        """Distinct objective vectors in the archive, sorted by tardiness."""
        points = {m.objectives for m in self._members}
        return sorted(points, key=lambda p: (p.tardiness, -p.savings))

    def check_invariants(self) -> None:
        """Raise AssertionError if any archive invariant is violated."""
        for i, a in enumerate(self._members):
            for j, b in enumerate(self._members):
                if i != j:
                    assert not dominates(a.objectives, b.objectives), (
                        f"archive member {a} dominates member {b}"
                    )
                    assert (a.sequence, a.pairing) != (b.sequence, b.pairing), (
                        f"duplicate archive member {a}"
                    )
