"""Tests for L1 ambiguity sets and worst-case expectations."""

import numpy as np
import pytest

from drccbo.ambiguity import (
    empirical_reference, epsilon_schedule, l1_distance, worst_case_expectation, worst_case_expectation_batch,
)
from drccbo.core.exceptions import ConfigurationError, DimensionMismatchError
from drccbo.core.models import AmbiguitySet, DiscreteDistribution, GridSpace

from oracles import lp_worst_case


def _uniform_set(n, radius):
    return AmbiguitySet(DiscreteDistribution.uniform(n), radius)


class TestDistributions:

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ConfigurationError):
            DiscreteDistribution(np.array([0.5, 0.4]))

    def test_negative_weight_rejected(self):
        with pytest.raises(ConfigurationError):
            DiscreteDistribution(np.array([1.5, -0.5]))

    def test_negative_radius_rejected(self):
        with pytest.raises(ConfigurationError):
            AmbiguitySet(DiscreteDistribution.uniform(3), -0.1)

    def test_l1_distance_examples(self):
        a = DiscreteDistribution(np.array([1.0, 0.0]))
        b = DiscreteDistribution(np.array([0.0, 1.0]))
        assert l1_distance(a, a) == 0.0
        assert l1_distance(a, b) == 2.0
        assert l1_distance(DiscreteDistribution(np.array([0.5, 0.5])),
                           DiscreteDistribution(np.array([0.3, 0.7]))) == pytest.approx(0.4, abs=1e-15)

    def test_l1_distance_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            l1_distance(DiscreteDistribution.uniform(2), DiscreteDistribution.uniform(3))


class TestWorstCaseExpectation:

    def test_zero_radius_is_nominal(self):
        reference = DiscreteDistribution(np.array([0.2, 0.3, 0.5]))
        costs = np.array([4.0, -1.0, 2.5])
        assert worst_case_expectation(costs, AmbiguitySet(reference, 0.0)) == pytest.approx(costs @ reference.weights)

    def test_full_budget_reaches_minimum(self):
        reference = DiscreteDistribution(np.array([0.1, 0.6, 0.3]))
        assert worst_case_expectation([1.0, 2.0, 3.0], AmbiguitySet(reference, 2.0)) == pytest.approx(1.0, abs=1e-12)
        assert worst_case_expectation([1.0, 2.0, 3.0], AmbiguitySet(reference, 96.2)) == pytest.approx(1.0, abs=1e-12)

    def test_hand_computed_example(self):
        value = worst_case_expectation([1.0, 2.0, 3.0], _uniform_set(3, 0.15))
        assert value == pytest.approx(1.85, abs=1e-12)

    def test_mass_is_stripped_across_several_coordinates(self):
        # budget 0.8 moves 0.4: all 0.25 of the cost-4 atom, then 0.15 of the cost-3 atom
        value = worst_case_expectation([1.0, 2.0, 3.0, 4.0], _uniform_set(4, 0.8))
        assert value == pytest.approx(2.5 - 0.25 * 3.0 - 0.15 * 2.0, abs=1e-12)

    def test_monotone_in_radius(self, rng):
        costs = rng.normal(size=7)
        reference = DiscreteDistribution.from_unnormalized(rng.random(7))
        values = [worst_case_expectation(costs, AmbiguitySet(reference, r)) for r in np.linspace(0, 2.5, 26)]
        assert np.all(np.diff(values) <= 1e-12)

    def test_translation_equivariance(self, rng):
        costs = rng.normal(size=6)
        ambiguity = AmbiguitySet(DiscreteDistribution.from_unnormalized(rng.random(6)), 0.3)
        shifted = worst_case_expectation(costs + 3.25, ambiguity)
        assert shifted == pytest.approx(worst_case_expectation(costs, ambiguity) + 3.25, abs=1e-12)

    def test_binary_costs_stay_in_unit_interval(self, rng):
        for _ in range(50):
            costs = (rng.random(9) > 0.5).astype(float)
            value = worst_case_expectation(costs, _uniform_set(9, rng.uniform(0, 2.5)))
            assert 0.0 <= value <= 1.0

    def test_batch_matches_rows(self, rng):
        costs = rng.normal(size=(3, 4, 5))
        ambiguity = AmbiguitySet(DiscreteDistribution.from_unnormalized(rng.random(5)), 0.4)
        batch = worst_case_expectation_batch(costs, ambiguity)
        assert batch.shape == (3, 4)
        for i in range(3):
            for j in range(4):
                assert batch[i, j] == pytest.approx(worst_case_expectation(costs[i, j], ambiguity), abs=1e-12)

    def test_wrong_length_rejected(self):
        with pytest.raises(DimensionMismatchError):
            worst_case_expectation([1.0, 2.0], _uniform_set(3, 0.1))


@pytest.mark.oracle
class TestLpOracle:

    def test_matches_lp_on_random_instances(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            n = int(rng.integers(1, 21))
            costs = rng.uniform(-10, 10, size=n)
            if rng.random() < 0.2:
                # ties exercise the stable ordering
                costs = np.round(costs)
            reference = DiscreteDistribution.from_unnormalized(rng.random(n) + 1e-3)
            radius = float(rng.uniform(0, 2.5))
            expected = lp_worst_case(costs, reference.weights, radius)
            actual = worst_case_expectation(costs, AmbiguitySet(reference, radius))
            assert actual == pytest.approx(expected, abs=1e-9)

    def test_matches_lp_with_sparse_reference(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(2, 12))
            counts = np.bincount(rng.integers(0, n, size=5), minlength=n)
            reference = DiscreteDistribution(counts / counts.sum())
            costs = rng.uniform(-5, 5, size=n)
            radius = float(rng.uniform(0, 2.5))
            assert worst_case_expectation(costs, AmbiguitySet(reference, radius)) == pytest.approx(
                lp_worst_case(costs, reference.weights, radius), abs=1e-9)


class TestEmpiricalReference:

    def test_counts(self):
        assert empirical_reference([0, 1, 0, 0], 2).weights.tolist() == [0.75, 0.25]

    def test_point_mass(self):
        grid = GridSpace(np.arange(3.0), np.arange(5.0))
        assert empirical_reference([3], grid).weights.tolist() == [0.0, 0.0, 0.0, 1.0, 0.0]

    def test_empty_rejected(self):
        with pytest.raises(ConfigurationError):
            empirical_reference([], 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(ConfigurationError):
            empirical_reference([0, 3], 3)

    def test_converges_to_sampling_law(self):
        rng = np.random.default_rng(3)
        truth = DiscreteDistribution.from_unnormalized(rng.random(50) + 0.5)
        draws = rng.choice(50, size=50_000, p=truth.weights)
        assert l1_distance(empirical_reference(draws, 50), truth) < 0.05


class TestEpsilonSchedule:

    def test_closed_form(self):
        expected = 50 * np.sqrt(0.5 * np.log(50 * np.pi ** 2 / 0.3))
        assert epsilon_schedule(1, 50, 0.1) == pytest.approx(expected, rel=1e-14)
        assert epsilon_schedule(1, 50, 0.1) == pytest.approx(96.21, abs=0.02)

    def test_decays(self):
        assert epsilon_schedule(10_000, 50, 0.1) < epsilon_schedule(100, 50, 0.1)
        assert epsilon_schedule(10 ** 9, 5, 0.1) > 0

    def test_rejects_nonpositive_t(self):
        with pytest.raises(ConfigurationError):
            epsilon_schedule(0, 5, 0.1)
