"""
Valid pairings of adjacent positions
====================================

Only neighbouring positions may pair, and no two neighbours may both stay
single.  The number of such pairings follows a two-term recurrence.
"""

from pairsched import count_pairings, enumerate_pairings, greedy_pairing, load_problem, bundled_instance_path

## All valid pairings of five positions.
for pairing in enumerate_pairings(5):
    print(pairing.pairs)

## Counting without enumerating: the recurrence splits pairings by whether
## the first position is paired.
print("n, paired_start, unpaired_start, total")
for n in range(2, 13):
    counts = count_pairings(n)
    print(f"{n}, {counts.paired_start}, {counts.unpaired_start}, {counts.total}")

assert count_pairings(10).total == 12
assert all(count_pairings(n).total == len(enumerate_pairings(n)) for n in range(2, 13))

## Greedy pairing: repeatedly pair the adjacent jobs with the highest savings.
instance = load_problem(bundled_instance_path("example1"))
sequence = (2, 5, 1, 4, 3)
pairing = greedy_pairing(sequence, instance.savings)
print(f"greedy pairing of {sequence}: {pairing.pairs}")
