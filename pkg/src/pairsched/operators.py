"""Stochastic sequence operators: swap, shift, and symmetry.

Each operator draws from an explicit random source and returns a new tuple;
inputs are never mutated.  Sequences shorter than two elements pass through
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

RandomSource = np.random.Generator

OPERATOR_NAMES = ("swap", "shift", "symmetry")


def make_rng(seed: int) -> RandomSource:
    """Seeded random source; equal seeds replay the same draws on any platform."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class OperatorParams:
    """Operator strengths and the candidate count drawn per operator step.

    swap_factor: most positions one swap may rearrange (>= 2).
    shift_factor: longest block one shift may relocate (>= 1).
    symmetry_factor: longest fixed centre of a reversal window (>= 0).
    search_enforcement: candidates generated per operator application (>= 1).
    """

    swap_factor: int = 2
    shift_factor: int = 1
    symmetry_factor: int = 0
    search_enforcement: int = 20

    def __post_init__(self) -> None:
        if self.swap_factor < 2:
            raise ValueError(f"swap factor must be >= 2, got {self.swap_factor}")
        if self.shift_factor < 1:
            raise ValueError(f"shift factor must be >= 1, got {self.shift_factor}")
        if self.symmetry_factor < 0:
            raise ValueError(f"symmetry factor must be >= 0, got {self.symmetry_factor}")
        if self.search_enforcement < 1:
            raise ValueError(
                f"search enforcement must be >= 1, got {self.search_enforcement}"
            )


def swap(sequence: tuple[int, ...], swap_factor: int, rng: RandomSource) -> tuple[int, ...]:
    """Rearrange m randomly chosen positions, m drawn from 2..min(factor, n).

    The rearrangement is a uniformly random non-identity permutation of the
    chosen positions, so at least two entries always move.
    """
    n = len(sequence)
    if n < 2:
        return tuple(sequence)
    m = int(rng.integers(2, min(swap_factor, n) + 1))
    positions = rng.choice(n, size=m, replace=False)
    while True:
        order = rng.permutation(m)
        if (order != np.arange(m)).any():
            break
    out = list(sequence)
    values = [sequence[p] for p in positions]
    for target, source in zip(positions, order):
        out[target] = values[source]
    return tuple(out)


def shift(sequence: tuple[int, ...], shift_factor: int, rng: RandomSource) -> tuple[int, ...]:
    """Cut a block of length 1..min(factor, n-1) and reinsert it elsewhere.

    The insertion gap is drawn uniformly over all gaps of the shortened
    sequence, front included, so the identity move is possible.
    """
    n = len(sequence)
    if n < 2:
        return tuple(sequence)
    length = int(rng.integers(1, min(shift_factor, n - 1) + 1))
    start = int(rng.integers(0, n - length + 1))
    block = sequence[start : start + length]
    rest = sequence[:start] + sequence[start + length :]
    gap = int(rng.integers(0, len(rest) + 1))
    return rest[:gap] + block + rest[gap:]


def reverse_window(sequence: tuple[int, ...], lo: int, hi: int) -> tuple[int, ...]:
    """Reverse the half-open slice [lo, hi); applying it twice is the identity."""
    if not 0 <= lo < hi <= len(sequence):
        raise ValueError(f"window [{lo}, {hi}) is out of bounds for n={len(sequence)}")
    return sequence[:lo] + sequence[lo:hi][::-1] + sequence[hi:]


def symmetry(
    sequence: tuple[int, ...], symmetry_factor: int, rng: RandomSource
) -> tuple[int, ...]:
    """Reverse a window built from a centre block plus a symmetric radius.

    Draws a centre length c from 0..min(factor, n-2), a centre start among
    placements leaving room on both sides, and a radius r >= 1 keeping the
    window [start - r, start + c + r) inside the sequence.  With factor 0 the
    centre is empty and an even-length window around a boundary is reversed.
    """
    n = len(sequence)
    if n < 2:
        return tuple(sequence)
    centre_len = int(rng.integers(0, min(symmetry_factor, n - 2) + 1))
    start = int(rng.integers(1, n - centre_len))
    radius = int(rng.integers(1, min(start, n - centre_len - start) + 1))
    return reverse_window(sequence, start - radius, start + centre_len + radius)


_APPLY = {
    "swap": lambda seq, params, rng: swap(seq, params.swap_factor, rng),
    "shift": lambda seq, params, rng: shift(seq, params.shift_factor, rng),
    "symmetry": lambda seq, params, rng: symmetry(seq, params.symmetry_factor, rng),
}


def candidates(
    sequence: tuple[int, ...],
    op: str,
    params: OperatorParams,
    rng: RandomSource,
) -> list[tuple[int, ...]]:
    """Apply one operator ``search_enforcement`` times and append the incumbent.

    The returned list therefore has search_enforcement + 1 entries, with the
    unchanged input sequence last.
    """
    if op not in _APPLY:
        raise ValueError(f"unknown operator {op!r}; expected one of {OPERATOR_NAMES}")
    apply = _APPLY[op]
    out = [apply(sequence, params, rng) for _ in range(params.search_enforcement)]
    out.append(tuple(sequence))
    return out
