"""
Scoring the search against the exact front
===========================================

Recovery experiments run the solver once per seed and score each archive by
the fraction of the true front's objective points it found.
"""

from pairsched import (
    ExperimentSpec,
    enumerate_front,
    random_instance,
    run_experiment,
)

## A reproducible random instance: same seed, same instance.
instance = random_instance(7, seed=23)
front = enumerate_front(instance)
print(f"7 random jobs, exact front has {len(front.objective_points)} points")

## Ten seeded runs at a small iteration budget.
spec = ExperimentSpec(instance=instance, seeds=tuple(range(10)), iterations=50)
summary = run_experiment(spec, front=front)
print("seed  recovered  recovery  complete")
for record in summary.runs:
    print(f"{record.seed:4d}  {record.recovered_points:9d}  "
          f"{record.recovery:8.2f}  {str(record.complete):s}")
print(f"mean recovery {summary.mean_recovery:.3f}, "
      f"complete runs {summary.complete_runs}/{len(summary.runs)}")

## More iterations buy more of the front.
for iterations in (5, 25, 100):
    spec = ExperimentSpec(instance=instance, seeds=tuple(range(10)), iterations=iterations)
    summary = run_experiment(spec, front=front)
    print(f"iterations {iterations:4d}: mean recovery {summary.mean_recovery:.3f}")
