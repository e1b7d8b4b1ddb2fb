"""
Exact Pareto fronts by exhaustive enumeration
=============================================

For small instances every sequence/pairing combination can be checked,
giving the true trade-off curve between tardiness and savings.
"""

from pairsched import bundled_instance_path, enumerate_front, greedy_front, load_problem, notation

instance = load_problem(bundled_instance_path("example1"))

## The full front: every permutation under every valid pairing.
front = enumerate_front(instance)
print("exact front")
for solution in front.solutions:
    point = solution.objectives
    print(f"  {notation(solution.sequence, solution.pairing):20s} "
          f"T = {point.tardiness:2d}  C = {point.savings / 100:5.2f}")

points = [(p.tardiness, p.savings) for p in front.objective_points]
print(f"objective points: {points}")

## Restricting each sequence to its greedy pairing loses optimal trade-offs
## whenever the greedy choice sacrifices a better global pairing.
restricted = greedy_front(instance)
print("greedy-pairing front points:",
      [(p.tardiness, p.savings) for p in restricted.objective_points])

## Enumeration cost grows factorially, so it refuses large instances unless
## the bound is raised explicitly.
try:
    enumerate_front(instance, limit_n=4)
except ValueError as exc:
    print(f"guard: {exc}")
