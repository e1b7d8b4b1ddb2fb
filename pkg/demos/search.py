"""
Multiobjective search over sequences and pairings
=================================================

The solver perturbs an incumbent sequence with swap, shift, and symmetry
moves, evaluates every candidate under every valid pairing, and archives all
non-dominated solutions it meets.
"""

from pairsched import (
    SolverConfig,
    bundled_instance_path,
    enumerate_front,
    load_problem,
    notation,
    run,
)

## A short run on the 5-job instance recovers the exact front.
small = load_problem(bundled_instance_path("example1"))
result = run(small, SolverConfig(iterations=100, seed=0))
print(f"5 jobs: {result.evaluations} evaluations, {result.wall_time_ms:.0f} ms")
found = {(p.tardiness, p.savings) for p in result.archive.objective_points()}
exact = {(p.tardiness, p.savings) for p in enumerate_front(small).objective_points}
assert found == exact
print(f"archive matches the exact front: {sorted(found)}")

## The 10-job instance has 10! x 12 combinations; the search samples a tiny
## fraction of them.
large = load_problem(bundled_instance_path("example2"))
result = run(large, SolverConfig(iterations=1000, seed=0))
print(f"10 jobs: {result.evaluations} evaluations, {result.wall_time_ms:.0f} ms")
for solution in sorted(result.archive, key=lambda s: s.objectives.tardiness):
    point = solution.objectives
    print(f"  {notation(solution.sequence, solution.pairing):34s} "
          f"T = {point.tardiness:2d}  C = {point.savings / 100:5.2f}")
