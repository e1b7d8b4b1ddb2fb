"""Pairings of adjacent sequence positions.

A pairing groups adjacent positions of a job sequence into disjoint pairs so
that no two neighbouring positions are both left unpaired (the matching is
maximal on the path 1-2-...-n).  Positions are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .domain import SavingsMatrix


@dataclass(frozen=True)
class Pairing:
    """Disjoint adjacent-position pairs, stored sorted by start position."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        normalized = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", normalized)
        used: set[int] = set()
        for a, b in normalized:
            if b != a + 1 or a < 1:
                raise ValueError(f"pair ({a}, {b}) is not an adjacent position pair")
            if a in used or b in used:
                raise ValueError(f"pair ({a}, {b}) overlaps another pair")
            used.update((a, b))

    def covers(self, position: int) -> bool:
        return any(a == position or b == position for a, b in self.pairs)

    def validate_for(self, n: int) -> None:
        """Raise unless this pairing is valid and maximal for n positions."""
        if self.pairs and self.pairs[-1][1] > n:
            raise ValueError(f"pair {self.pairs[-1]} lies outside positions 1..{n}")
        covered = {p for pair in self.pairs for p in pair}
        for a in range(1, n):
            if a not in covered and a + 1 not in covered:
                raise ValueError(
                    f"positions {a} and {a + 1} are both unpaired; "
                    "adjacent unpaired positions are not allowed"
                )


@dataclass(frozen=True)
class PairingCounts:
    """How many valid pairings exist, split by whether positions 1-2 form a pair."""

    paired_start: int
    unpaired_start: int

    @property
    def total(self) -> int:
        return self.paired_start + self.unpaired_start


# --------------------------------------------------------------------------
# enumeration and counting
# --------------------------------------------------------------------------

def enumerate_pairings(n: int) -> tuple[Pairing, ...]:
    """All valid pairings for ``n`` positions, in lexicographic order.

    For n=1 the only valid pairing is the empty one.
    """
    if n < 1:
        raise ValueError(f"cannot enumerate pairings for n={n}; need n >= 1")
    return _enumerate_cached(n)


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Pairing, ...]:
    def extend(start: int) -> list[tuple[tuple[int, int], ...]]:
        # Pairings of the tail positions start..n.
        if start >= n:
            return [()]
        out: list[tuple[tuple[int, int], ...]] = []
        for rest in extend(start + 2):
            out.append(((start, start + 1),) + rest)
        if start + 2 <= n:
            # Leave `start` unpaired; its neighbour must then be paired.
            for rest in extend(start + 3):
                out.append(((start + 1, start + 2),) + rest)
        return out

    return tuple(Pairing(pairs) for pairs in extend(1))


def count_pairings(n: int) -> PairingCounts:
    """Count valid pairings of ``n`` positions without enumerating them.

    Uses the recurrence paired_start(n) = total(n - 2) and
    unpaired_start(n) = paired_start(n - 1), seeded at n = 2 and n = 3.
    """
    if n < 2:
        raise ValueError(f"pairing counts are defined for n >= 2, got n={n}")
    p1 = {2: 1, 3: 1}
    p2 = {2: 0, 3: 1}
    for m in range(4, n + 1):
        p1[m] = p1[m - 2] + p2[m - 2]
        p2[m] = p1[m - 1]
    return PairingCounts(paired_start=p1[n], unpaired_start=p2[n])


# --------------------------------------------------------------------------
# greedy construction
# --------------------------------------------------------------------------

def greedy_pairing(sequence: tuple[int, ...], savings: "SavingsMatrix") -> Pairing:
    """Build a pairing by repeatedly taking the highest-savings adjacent pair.

    Ties break toward the smaller start position.  Selection continues until
    no two adjacent positions remain unpaired, so the result is always valid.
    """
    n = len(sequence)
    free = set(range(1, n + 1))
    pairs: list[tuple[int, int]] = []
    while True:
        best_start = 0
        best_value = -1
        for a in range(1, n):
            if a in free and a + 1 in free:
                value = savings.between(sequence[a - 1], sequence[a])
                if value > best_value:
                    best_start, best_value = a, value
        if best_start == 0:
            break
        pairs.append((best_start, best_start + 1))
        free.discard(best_start)
        free.discard(best_start + 1)
    return Pairing(tuple(pairs))
