"""Monte Carlo estimators vs closed forms, and stream reproducibility."""

import math

import numpy as np
import pytest

import trimoduli as tm


class TestReferenceValues:
    def test_langford_constant(self):
        assert tm.langford_obtuse_probability() == 97.0 / 150.0 + math.pi / 40.0

    def test_mean_distance_constant(self):
        expected = (2.0 + math.sqrt(2.0) + 5.0 * math.asinh(1.0)) / 15.0
        assert tm.unit_square_mean_distance() == pytest.approx(expected, abs=1e-16)
        assert tm.unit_square_mean_distance() == pytest.approx(0.5214054331, abs=1e-9)


class TestPairDistances:
    def test_unit_square_diagonal(self):
        d = tm.pair_distances(
            np.array([0.0]), np.array([0.0]), np.array([1.0]), np.array([1.0])
        )
        assert d[0] == math.sqrt(2.0)

    def test_batch(self):
        d = tm.pair_distances(
            np.array([0.0, 1.0]),
            np.array([0.0, 1.0]),
            np.array([3.0, 1.0]),
            np.array([4.0, 1.0]),
        )
        assert d.tolist() == [5.0, 0.0]


class TestObtuseEstimator:
    def test_deterministic(self):
        a = tm.obtuse_probability(20_000, 11)
        b = tm.obtuse_probability(20_000, 11)
        assert a == b

    def test_worker_count_does_not_change_result(self, monkeypatch):
        base = tm.obtuse_probability(200_000, 5)
        monkeypatch.setenv(tm.ENV_THREADS, "2")
        assert tm.obtuse_probability(200_000, 5) == base

    def test_close_to_reference(self):
        est = tm.obtuse_probability(100_000, 42)
        assert abs(est.mean - tm.langford_obtuse_probability()) < 6 * est.std_error
        assert est.std_error < 0.002

    def test_seed_changes_draws(self):
        assert tm.obtuse_probability(10_000, 1) != tm.obtuse_probability(10_000, 2)

    def test_error_shrinks_with_samples(self):
        small = tm.obtuse_probability(100_000, 3)
        large = tm.obtuse_probability(400_000, 3)
        assert large.std_error == pytest.approx(small.std_error / 2, rel=0.02)

    def test_sample_guard(self):
        with pytest.raises(tm.GuardError):
            tm.obtuse_probability(10, 0)


class TestDistanceEstimator:
    def test_deterministic(self):
        assert tm.mean_pair_distance(20_000, 11) == tm.mean_pair_distance(20_000, 11)

    def test_close_to_reference(self):
        est = tm.mean_pair_distance(100_000, 42)
        assert abs(est.mean - tm.unit_square_mean_distance()) < 6 * est.std_error
        assert est.std_error < 0.002

    def test_worker_count_does_not_change_result(self, monkeypatch):
        base = tm.mean_pair_distance(200_000, 5)
        monkeypatch.setenv(tm.ENV_THREADS, "2")
        assert tm.mean_pair_distance(200_000, 5) == base


class TestHistogram:
    def test_labeled_total_is_six_per_sample(self):
        h = tm.shape_histogram(5_000, 8, 1)
        assert h.total == 6 * 5_000
        assert h.labeled

    def test_single_sample(self):
        h = tm.shape_histogram(1, 4, 0)
        assert h.total == 6

    def test_sorted_mode_respects_moduli_region(self):
        # sorted shapes satisfy a <= b and a + b > 1, so no mass may land
        # strictly below the diagonal or on the far side of the antidiagonal
        h = tm.shape_histogram(5_000, 8, 1, labeled=False)
        assert h.total == 5_000
        for i in range(8):
            for j in range(8):
                if i > j or i + j <= 6:
                    assert h.counts[i, j] == 0

    def test_obtuse_count_matches_estimator(self):
        h = tm.shape_histogram(100_000, 16, 3)
        est = tm.obtuse_probability(100_000, 3)
        assert h.obtuse_count == round(est.mean * est.samples)

    def test_equilateral_bin_populated_but_not_modal(self):
        # mass near the equilateral point is positive yet visibly below the
        # obtuse ridge: the non-equidistribution signal in miniature
        h = tm.shape_histogram(100_000, 16, 3)
        eq = h.counts[10, 10]  # bin containing (2/3, 2/3)
        assert 0 < eq < h.counts.max()

    def test_deterministic_across_workers(self, monkeypatch):
        base = tm.shape_histogram(70_000, 12, 9)
        monkeypatch.setenv(tm.ENV_THREADS, "2")
        again = tm.shape_histogram(70_000, 12, 9)
        assert np.array_equal(base.counts, again.counts)
        assert base.obtuse_count == again.obtuse_count

    def test_bin_guard(self):
        with pytest.raises(tm.GuardError):
            tm.shape_histogram(1_000, 1, 0)
        with pytest.raises(tm.GuardError):
            tm.shape_histogram(1_000, 5_000, 0)

    def test_total_validation(self):
        with pytest.raises(ValueError):
            tm.Histogram2D(
                counts=np.zeros((4, 4), dtype=np.int64),
                bin_count=4,
                samples=10,
                seed=0,
                labeled=True,
                obtuse_count=0,
            )


class TestMcEstimate:
    def test_validation(self):
        with pytest.raises(ValueError):
            tm.McEstimate(mean=0.5, std_error=-0.1, samples=10, seed=0)
        with pytest.raises(ValueError):
            tm.McEstimate(mean=0.5, std_error=0.1, samples=0, seed=0)
