import numpy as np
import pytest

from helpers import all_partitions, bell_triangle, brute_silhouette, canonical, random_delta, stirling2
from silbound import (
    Clustering,
    KOutOfRange,
    TooLarge,
    asw,
    best_per_k,
    bound_report,
    enumerate_partitions,
    optimal_asw,
    validate_matrix,
)
from silbound.oracle import PartitionConstraints


class TestEnumeration:
    def test_bell_counts(self):
        assert sum(1 for _ in enumerate_partitions(3)) == 5
        assert sum(1 for _ in enumerate_partitions(5)) == 52
        assert sum(1 for _ in enumerate_partitions(9)) == bell_triangle(9)

    def test_excluding_single_cluster_gives_51(self):
        it = enumerate_partitions(5, PartitionConstraints(k_min=2))
        assert sum(1 for _ in it) == 51

    def test_per_k_counts_match_stirling(self):
        for k in range(1, 7):
            it = enumerate_partitions(6, PartitionConstraints(k=k))
            assert sum(1 for _ in it) == stirling2(6, k)

    def test_each_partition_exactly_once(self):
        seen = [canonical(c.labels) for c in enumerate_partitions(6)]
        assert len(seen) == len(set(seen))
        assert set(seen) == all_partitions(6)

    @pytest.mark.parametrize("n,min_size", [(6, 2), (7, 2), (7, 3), (8, 4)])
    def test_min_size_matches_post_filter(self, n, min_size):
        expect = {
            p for p in all_partitions(n) if min(len(block) for block in p) >= min_size
        }
        got = {
            canonical(c.labels)
            for c in enumerate_partitions(n, PartitionConstraints(min_size=min_size))
        }
        assert got == expect

    @pytest.mark.parametrize("n,k,min_size", [(7, 3, 2), (7, 2, 3), (8, 3, 2), (8, 2, 4)])
    def test_combined_constraints_match_post_filter(self, n, k, min_size):
        expect = {
            p
            for p in all_partitions(n)
            if len(p) == k and min(len(block) for block in p) >= min_size
        }
        got = {
            canonical(c.labels)
            for c in enumerate_partitions(n, PartitionConstraints(min_size=min_size, k=k))
        }
        assert got == expect

    def test_infeasible_constraints_yield_nothing(self):
        # five clusters of two need ten points
        it = enumerate_partitions(9, PartitionConstraints(min_size=2, k=5))
        assert sum(1 for _ in it) == 0

    def test_lexicographic_growth_string_order(self):
        first = [tuple(c.labels - 1) for c in enumerate_partitions(4)]
        assert first[:5] == [
            (0, 0, 0, 0),
            (0, 0, 0, 1),
            (0, 0, 1, 0),
            (0, 0, 1, 1),
            (0, 0, 1, 2),
        ]
        assert first[-1] == (0, 1, 2, 3)

    def test_cap(self):
        with pytest.raises(TooLarge):
            enumerate_partitions(16)


class TestOptimal:
    def test_toy_unique_optimum(self, toy_delta):
        result = optimal_asw(toy_delta)
        assert list(result.best.labels) == [1, 1, 1, 2, 2]
        assert result.best_asw == pytest.approx(0.7512, abs=1e-3)
        assert result.ties == 1
        assert result.evaluated == 51

    def test_toy_fixed_k4(self, toy_delta):
        result = optimal_asw(toy_delta, PartitionConstraints(k=4))
        assert canonical(result.best.labels) == canonical([1, 2, 3, 4, 4])
        assert result.best_asw == pytest.approx(0.3068, abs=1e-3)

    def test_two_identical_far_pairs(self):
        d = np.full((4, 4), 10.0)
        d[0, 1] = d[1, 0] = 1.0
        d[2, 3] = d[3, 2] = 1.0
        np.fill_diagonal(d, 0.0)
        delta = validate_matrix(d)
        result = optimal_asw(delta)
        assert canonical(result.best.labels) == canonical([1, 1, 2, 2])
        _, _, _, expect = brute_silhouette(delta.values, [1, 1, 2, 2])
        assert result.best_asw == pytest.approx(expect, abs=1e-12)
        assert result.evaluated == 14  # Bell(4) - 1

    def test_determinism(self, toy_delta):
        a = optimal_asw(toy_delta)
        b = optimal_asw(toy_delta)
        assert list(a.best.labels) == list(b.best.labels)
        assert a.best_asw == b.best_asw
        assert (a.ties, a.evaluated) == (b.ties, b.evaluated)

    def test_optimum_respects_bound(self):
        rng = np.random.default_rng(61)
        for n in (5, 6, 7):
            delta = validate_matrix(random_delta(rng, n))
            assert optimal_asw(delta).best_asw <= bound_report(delta, 1).ub + 1e-12

    def test_constrained_vs_unconstrained(self):
        rng = np.random.default_rng(67)
        delta = validate_matrix(random_delta(rng, 7))
        unconstrained = optimal_asw(delta).best_asw
        for kappa in (2, 3):
            constrained = optimal_asw(delta, PartitionConstraints(min_size=kappa))
            assert constrained.best_asw <= unconstrained + 1e-12
            assert constrained.best_asw <= bound_report(delta, kappa).ub + 1e-12


class TestBestPerK:
    def test_toy_table(self, toy_delta):
        table = best_per_k(toy_delta, range(2, 6))
        values = [row.asw for row in table]
        assert np.allclose(values, [0.7512, 0.5173, 0.3068, 0.0000], atol=1e-3)
        assert canonical(table[0].clustering.labels) == canonical([1, 1, 1, 2, 2])
        assert canonical(table[1].clustering.labels) == canonical([1, 2, 1, 3, 3])
        assert canonical(table[2].clustering.labels) == canonical([1, 2, 3, 4, 4])

    def test_k_equals_n(self, toy_delta):
        (row,) = best_per_k(toy_delta, [5])
        assert row.asw == 0.0
        assert row.clustering.k == 5

    def test_matches_filtered_enumeration(self):
        rng = np.random.default_rng(71)
        delta = validate_matrix(random_delta(rng, 6))
        table = best_per_k(delta, range(2, 7))
        for row in table:
            best = max(
                asw(delta, c)
                for c in enumerate_partitions(6, PartitionConstraints(k=row.k))
            )
            assert row.asw == pytest.approx(best, abs=1e-15)

    def test_k_out_of_range(self, toy_delta):
        with pytest.raises(KOutOfRange):
            best_per_k(toy_delta, [1])
        with pytest.raises(KOutOfRange):
            best_per_k(toy_delta, [6])


class TestIterator:
    def test_yields_valid_clusterings(self):
        for clustering in enumerate_partitions(5, PartitionConstraints(k_min=2)):
            assert isinstance(clustering, Clustering)
            assert clustering.k >= 2
            assert len(np.unique(clustering.labels)) == clustering.k
