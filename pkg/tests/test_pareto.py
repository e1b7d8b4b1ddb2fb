"""Dominance relation, domination counts, selection, and archive behaviour."""

import pytest

from pairsched.domain import ObjectiveVector, Solution
from pairsched.operators import make_rng
from pairsched.pairing import Pairing
from pairsched.pareto import (
    ParetoArchive,
    dominates,
    domination_counts,
    select_best,
)


def vec(t, c):
    return ObjectiveVector(tardiness=t, savings=c)


def sol(t, c, tag=1):
    """A structural stand-in carrying the given objectives."""
    return Solution(sequence=(tag,), pairing=Pairing(()), objectives=vec(t, c))


class TestDominates:
    def test_better_on_both(self):
        assert dominates(vec(13, 862), vec(15, 831))

    def test_incomparable_tradeoff(self):
        assert not dominates(vec(13, 831), vec(15, 862))
        assert not dominates(vec(15, 862), vec(13, 831))

    def test_equal_vectors_do_not_dominate(self):
        assert not dominates(vec(13, 831), vec(13, 831))

    def test_strict_on_one_objective_suffices(self):
        assert dominates(vec(13, 831), vec(13, 800))
        assert dominates(vec(12, 831), vec(13, 831))

    def test_partial_order_properties(self):
        """Irreflexive, antisymmetric, and transitive on random triples."""
        rng = make_rng(20)
        for _ in range(2000):
            a, b, c = (
                vec(int(rng.integers(0, 6)), int(rng.integers(0, 6)))
                for _ in range(3)
            )
            assert not dominates(a, a)
            if dominates(a, b):
                assert not dominates(b, a)
            if dominates(a, b) and dominates(b, c):
                assert dominates(a, c)


class TestDominationCounts:
    def test_counts_on_a_small_set(self):
        solutions = [sol(13, 862), sol(13, 831), sol(15, 862), sol(15, 831)]
        counts = {r.solution.objectives: r.count for r in domination_counts(solutions)}
        assert counts[vec(13, 862)] == 0
        assert counts[vec(13, 831)] == 1
        assert counts[vec(15, 862)] == 1
        assert counts[vec(15, 831)] == 3

    def test_matches_pairwise_definition(self):
        rng = make_rng(21)
        for _ in range(50):
            solutions = [
                sol(int(rng.integers(0, 8)), int(rng.integers(0, 8)), tag=i)
                for i in range(int(rng.integers(1, 25)))
            ]
            records = domination_counts(solutions)
            for record in records:
                expected = sum(
                    dominates(other.objectives, record.solution.objectives)
                    for other in solutions
                )
                assert record.count == expected


class TestSelectBest:
    def test_singleton(self):
        only = sol(5, 5)
        assert select_best([only], make_rng(22)) is only

    def test_unique_minimum_always_wins(self):
        best = sol(1, 9)
        pool = [sol(3, 3), best, sol(2, 2), sol(4, 1)]
        for seed in range(30):
            assert select_best(pool, make_rng(seed)) is best

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError, match="empty solution set"):
            select_best([], make_rng(23))

    def test_never_selects_a_dominated_solution(self):
        rng = make_rng(24)
        for _ in range(200):
            pool = [
                sol(int(rng.integers(0, 6)), int(rng.integers(0, 6)), tag=i)
                for i in range(8)
            ]
            choice = select_best(pool, rng)
            blocked = any(
                dominates(other.objectives, choice.objectives) for other in pool
            )
            if blocked:
                # Only acceptable when every solution is dominated by another.
                assert all(
                    any(dominates(o.objectives, s.objectives) for o in pool)
                    for s in pool
                )

    def test_ties_broken_uniformly(self):
        """Chi-square over 10,000 draws among four mutually incomparable ties."""
        pool = [sol(1, 1, tag=1), sol(2, 2, tag=2), sol(3, 3, tag=3), sol(4, 4, tag=4)]
        rng = make_rng(25)
        hits = {1: 0, 2: 0, 3: 0, 4: 0}
        for _ in range(10_000):
            hits[select_best(pool, rng).sequence[0]] += 1
        expected = 10_000 / 4
        statistic = sum((observed - expected) ** 2 / expected for observed in hits.values())
        # 99.9th percentile of chi-square with 3 degrees of freedom.
        assert statistic < 16.266


class TestArchive:
    def test_insertion_prunes_dominated_members(self):
        archive = ParetoArchive([sol(15, 831)])
        assert archive.update(sol(13, 862, tag=2))
        assert [m.objectives for m in archive] == [vec(13, 862)]

    def test_dominated_candidate_rejected(self):
        archive = ParetoArchive([sol(13, 862)])
        assert not archive.update(sol(15, 831, tag=2))
        assert len(archive) == 1

    def test_incomparable_candidates_accumulate(self):
        archive = ParetoArchive()
        assert archive.update(sol(13, 831, tag=1))
        assert archive.update(sol(15, 862, tag=2))
        assert archive.objective_points() == [vec(13, 831), vec(15, 862)]

    def test_duplicate_structure_not_inserted_twice(self):
        archive = ParetoArchive()
        candidate = sol(10, 10)
        assert archive.update(candidate)
        assert not archive.update(candidate)
        assert len(archive) == 1

    def test_equal_objectives_distinct_structure_all_kept(self):
        archive = ParetoArchive()
        assert archive.update(sol(10, 10, tag=1))
        assert archive.update(sol(10, 10, tag=2))
        assert len(archive) == 2
        assert archive.objective_points() == [vec(10, 10)]

    def test_reoffering_members_is_a_no_op(self):
        archive = ParetoArchive([sol(13, 831, tag=1), sol(15, 862, tag=2)])
        before = archive.members
        for member in before:
            archive.update(member)
        assert archive.members == before

    def test_objective_points_sorted_by_tardiness(self):
        archive = ParetoArchive(
            [sol(15, 862, tag=1), sol(13, 831, tag=2), sol(14, 840, tag=3)]
        )
        points = archive.objective_points()
        assert points == sorted(points, key=lambda p: (p.tardiness, -p.savings))

    def test_equality_tracks_membership(self):
        a = ParetoArchive([sol(13, 831)])
        b = ParetoArchive([sol(13, 831)])
        assert a == b
        b.update(sol(12, 900, tag=2))
        assert a != b

    def test_invariants_hold_under_random_update_streams(self):
        rng = make_rng(26)
        for _ in range(40):
            archive = ParetoArchive()
            for i in range(int(rng.integers(5, 60))):
                archive.update(
                    sol(int(rng.integers(0, 10)), int(rng.integers(0, 10)), tag=i)
                )
                archive.check_invariants()
            # Every rejected-or-kept decision leaves a front: each offered point
            # is weakly dominated by some member.
            for member in archive:
                assert not any(
                    dominates(o.objectives, member.objectives) for o in archive
                )
