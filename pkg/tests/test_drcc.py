"""Tests for credible bounds, classification, acquisition and stopping."""

import numpy as np
import pytest

from drccbo.core.constants import BetaModes
from drccbo.core.exceptions import ConfigurationError, InternalInconsistencyError, SelectionError
from drccbo.core.models import AmbiguitySet, BoundsTable, DiscreteDistribution, Label, StopKind
from drccbo.drcc import (
    PolicyContext, ProposedPolicy, ScheduleParams, acquisition, acquisition_values, beta_schedule, classify,
    classify_all, compute_bounds_table, credible_interval, current_best, eta_parameter, f_bounds, g_bounds,
    indicator_interval, select_w_simulator, select_x, stopping,
)
from drccbo.surrogate import GpPosterior
from drccbo.utils.numeric import first_argmax


def _table(lower_f, upper_f, lower_g, upper_g, alpha=0.5, xi=0.1):
    lower_g = np.asarray(lower_g, dtype=float)
    upper_g = np.asarray(upper_g, dtype=float)
    return BoundsTable(lower_f, upper_f, lower_g, upper_g, classify_all(lower_g, upper_g, alpha, xi))


def _posteriors(kernel, grid, rng, n_obs=6):
    gp_f = GpPosterior.prior(kernel, grid)
    gp_g = GpPosterior.prior(kernel, grid)
    for _ in range(n_obs):
        x, w = int(rng.integers(grid.n_x)), int(rng.integers(grid.n_w))
        gp_f = gp_f.add_observation(x, w, float(rng.normal()))
        gp_g = gp_g.add_observation(x, w, float(rng.normal()))
    return gp_f, gp_g


class TestSchedules:

    def test_beta_closed_form(self):
        expected = 2.0 * np.log(2.0 * 1250 * np.pi ** 2 * 9 / (3.0 * 0.1))
        assert beta_schedule(3, 1250, 0.1) == pytest.approx(expected, rel=1e-14)

    def test_beta_increases(self):
        values = [beta_schedule(t, 100, 0.05) for t in range(1, 30)]
        assert np.all(np.diff(values) > 0)

    def test_eta_takes_smaller_term(self):
        assert eta_parameter(0.1, 0.1, 1.0, 10) == pytest.approx(0.01 * 0.1 / 80.0)
        assert eta_parameter(1e-3, 0.9, 1.0, 1) == pytest.approx(1e-3 * 1e-3 * 0.9 / 8.0)

    def test_beta_rejects_iteration_zero(self):
        with pytest.raises(ConfigurationError):
            beta_schedule(0, 100, 0.05)

    def test_eta_rejects_nonpositive(self):
        with pytest.raises(ConfigurationError):
            eta_parameter(0.0, 0.1, 1.0, 10)

    def test_fixed_mode_needs_both_widths(self):
        with pytest.raises(ConfigurationError):
            ScheduleParams(0.1, 0.05, 0.0, 0.5, 0.0, beta_mode=BetaModes.FIXED, sqrt_beta_f=2.0)

    def test_fixed_mode_betas(self):
        params = ScheduleParams(0.1, 0.05, 0.0, 0.5, 0.0, beta_mode=BetaModes.FIXED,
                                sqrt_beta_f=2.0, sqrt_beta_g=3.0)
        assert params.betas(7, 400) == (4.0, 9.0)

    def test_alpha_outside_unit_interval_rejected(self):
        with pytest.raises(ConfigurationError):
            ScheduleParams(0.1, 0.05, 0.0, 1.0, 0.0)


class TestIntervals:

    def test_credible_interval_at_prior(self, kernel, small_grid):
        gp = GpPosterior.prior(kernel, small_grid)
        assert credible_interval(gp, 0, 0, 4.0) == (-2.0, 2.0)

    def test_credible_interval_contains_mean(self, kernel, small_grid, rng):
        gp, _ = _posteriors(kernel, small_grid, rng)
        lower, upper = credible_interval(gp, 3, 2, 2.5)
        mean, _ = gp.posterior_at(3, 2)
        assert lower <= mean <= upper

    def test_negative_beta_rejected(self, kernel, small_grid):
        gp = GpPosterior.prior(kernel, small_grid)
        with pytest.raises(ConfigurationError):
            credible_interval(gp, 0, 0, -1.0)

    @pytest.mark.parametrize("l_g,u_g,expected", [
        (0.5, 1.0, (1, 1)),
        (-0.05, 1.0, (1, 1)),
        (-0.5, 0.2, (0, 1)),
        (-0.5, 0.0, (0, 0)),
    ])
    def test_indicator_interval(self, l_g, u_g, expected):
        assert indicator_interval(l_g, u_g, 0.0, 0.1) == expected


class TestBounds:

    def test_ordering_and_range(self, kernel, small_grid, rng):
        gp_f, gp_g = _posteriors(kernel, small_grid, rng)
        ambiguity = AmbiguitySet(DiscreteDistribution.uniform(small_grid.n_w), 0.3)
        table = compute_bounds_table(gp_f, gp_g, 4.0, 4.0, 0.0, 0.01, 0.5, 0.1, ambiguity)
        assert table.invariant_violations() == []
        assert np.all(table.lower_g >= 0) and np.all(table.upper_g <= 1)

    def test_pointwise_bounds_match_table(self, kernel, small_grid, rng):
        gp_f, gp_g = _posteriors(kernel, small_grid, rng)
        ambiguity = AmbiguitySet(DiscreteDistribution.uniform(small_grid.n_w), 0.2)
        table = compute_bounds_table(gp_f, gp_g, 2.0, 3.0, 0.1, 0.0, 0.4, 0.05, ambiguity)
        for x in range(small_grid.n_x):
            lF, uF = f_bounds(x, gp_f, 2.0, ambiguity)
            lG, uG = g_bounds(x, gp_g, 3.0, 0.1, 0.0, ambiguity)
            assert table.lower_f[x] == pytest.approx(lF, abs=1e-12)
            assert table.upper_f[x] == pytest.approx(uF, abs=1e-12)
            assert table.lower_g[x] == pytest.approx(lG, abs=1e-12)
            assert table.upper_g[x] == pytest.approx(uG, abs=1e-12)

    def test_zero_width_collapses_to_reference_expectation(self, kernel, small_grid, rng):
        gp_f, gp_g = _posteriors(kernel, small_grid, rng)
        reference = DiscreteDistribution.from_unnormalized(rng.random(small_grid.n_w) + 0.1)
        ambiguity = AmbiguitySet(reference, 0.0)
        for x in range(small_grid.n_x):
            expected_f = float(reference.weights @ gp_f.mean_grid[x])
            expected_g = float(reference.weights @ (gp_g.mean_grid[x] > 0.2))
            assert f_bounds(x, gp_f, 0.0, ambiguity) == pytest.approx((expected_f, expected_f), abs=1e-12)
            assert g_bounds(x, gp_g, 0.0, 0.2, 0.0, ambiguity) == pytest.approx((expected_g, expected_g), abs=1e-12)

    def test_bounds_tighten_as_width_shrinks(self, kernel, small_grid, rng):
        gp_f, gp_g = _posteriors(kernel, small_grid, rng)
        ambiguity = AmbiguitySet(DiscreteDistribution.uniform(small_grid.n_w), 0.2)
        for x in range(small_grid.n_x):
            intervals_f = [f_bounds(x, gp_f, beta, ambiguity) for beta in (9.0, 4.0, 1.0, 0.0)]
            intervals_g = [g_bounds(x, gp_g, beta, 0.0, 0.0, ambiguity) for beta in (9.0, 4.0, 1.0, 0.0)]
            for intervals in (intervals_f, intervals_g):
                for (wide_l, wide_u), (narrow_l, narrow_u) in zip(intervals, intervals[1:]):
                    assert wide_l <= narrow_l + 1e-12
                    assert narrow_u <= wide_u + 1e-12

    def test_prior_constraint_is_maybe_everywhere(self, kernel, small_grid):
        gp = GpPosterior.prior(kernel, small_grid)
        ambiguity = AmbiguitySet(DiscreteDistribution.uniform(small_grid.n_w), 0.0)
        table = compute_bounds_table(gp, gp, 4.0, 4.0, 0.0, 0.0, 0.5, 0.1, ambiguity)
        assert table.counts() == (0, 0, small_grid.n_x)


class TestClassification:

    @pytest.mark.parametrize("l_G,u_G,label", [
        (0.45, 0.9, Label.HIGH),
        (0.30, 0.9, Label.MAYBE),
        (0.10, 0.5, Label.LOW),
        (0.10, 0.51, Label.MAYBE),
    ])
    def test_classify(self, l_G, u_G, label):
        assert classify(l_G, u_G, 0.5, 0.1) is label

    def test_classify_all_matches_classify(self, rng):
        lower = rng.random(40)
        upper = np.minimum(1.0, lower + rng.random(40))
        labels = classify_all(lower, upper, 0.5, 0.1)
        assert [classify(l, u, 0.5, 0.1).value for l, u in zip(lower, upper)] == labels.tolist()

    def test_raising_lower_bound_only_moves_towards_high(self, rng):
        for _ in range(500):
            l_G, raised = np.sort(rng.random(2))
            u_G = rng.uniform(raised, 1.0)
            before = classify(l_G, u_G, 0.5, 0.1)
            after = classify(raised, u_G, 0.5, 0.1)
            assert after in (before, Label.HIGH)
            if before is Label.HIGH:
                assert after is Label.HIGH

    def test_recommendation_lowest_index_on_ties(self):
        table = _table([1.0, 2.0, 2.0], [3.0, 3.0, 3.0], [0.9, 0.9, 0.9], [1.0, 1.0, 1.0])
        assert table.recommendation() == 1


class TestAcquisition:

    def test_current_best_over_high(self):
        table = _table([1.0, 2.0, 5.0], [3.0, 3.0, 6.0], [0.9, 0.9, 0.1], [1.0, 1.0, 0.3])
        assert current_best(table) == 2.0

    def test_current_best_falls_back_to_maybe_then_all(self):
        maybe = _table([1.0, -2.0, 5.0], [3.0, 3.0, 6.0], [0.2, 0.2, 0.1], [0.9, 0.9, 0.3])
        assert current_best(maybe) == -2.0
        low = _table([1.0, -2.0], [3.0, 3.0], [0.0, 0.0], [0.1, 0.1])
        assert current_best(low) == -2.0

    def test_acquisition_values(self):
        # labels: H, M, L
        table = _table([1.0, 0.0, 0.0], [2.0, 4.0, 9.0], [0.9, 0.2, 0.0], [1.0, 0.8, 0.3])
        cbest = current_best(table)
        assert cbest == 1.0
        values = acquisition_values(table, cbest, 0.5, 0.1)
        factor = (0.8 - 0.4) / (0.8 - 0.2)
        assert values.tolist() == pytest.approx([1.0, 3.0 * factor, 0.0])
        assert select_x(table, values) == 1

    def test_degenerate_maybe_interval_is_inconsistent(self):
        labels = np.array([Label.MAYBE.value])
        table = BoundsTable([0.0], [1.0], [0.5], [0.5], labels)
        with pytest.raises(InternalInconsistencyError):
            acquisition(0, table, 0.0, 0.5, 0.1)

    def test_select_x_needs_candidates(self):
        table = _table([0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [0.2, 0.2])
        with pytest.raises(SelectionError):
            select_x(table, np.zeros(2))

    def test_select_w_simulator_picks_largest_variance(self, kernel, small_grid):
        gp_f = GpPosterior.prior(kernel, small_grid).add_observation(2, 0, 0.0)
        gp_g = GpPosterior.prior(kernel, small_grid).add_observation(2, 1, 0.0)
        assert select_w_simulator(2, gp_f, gp_g) == small_grid.n_w - 1

    def test_select_w_simulator_leaves_a_saturated_environment(self, kernel, small_grid):
        gp_f = GpPosterior.prior(kernel, small_grid)
        gp_g = GpPosterior.prior(kernel, small_grid)
        for _ in range(10):
            gp_f = gp_f.add_observation(1, 0, 0.0)
            gp_g = gp_g.add_observation(1, 0, 0.0)
        assert select_w_simulator(1, gp_f, gp_g) != 0

    def test_first_argmax_with_empty_mask(self):
        with pytest.raises(SelectionError):
            first_argmax(np.arange(3.0), np.zeros(3, dtype=bool))


class TestStopping:

    def test_no_solution(self):
        table = _table([0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [0.2, 0.2])
        assert stopping(table, 0.1).kind is StopKind.NO_SOLUTION

    def test_continue_without_high(self):
        table = _table([0.0, 0.0], [1.0, 1.0], [0.2, 0.0], [0.9, 0.2])
        assert stopping(table, 0.1).kind is StopKind.CONTINUE

    def test_converged_with_recommendation(self):
        table = _table([1.0, 1.95, 0.0], [2.0, 2.0, 5.0], [0.9, 0.9, 0.0], [1.0, 1.0, 0.2])
        status = stopping(table, 0.1)
        assert status.kind is StopKind.CONVERGED
        assert status.recommendation == 1
        assert status.terminal

    def test_maybe_design_blocks_convergence(self):
        table = _table([1.0, 1.95, 0.0], [2.0, 2.0, 5.0], [0.9, 0.9, 0.2], [1.0, 1.0, 0.9])
        assert stopping(table, 0.1).kind is StopKind.CONTINUE


class TestProposedPolicy:

    def _context(self, kernel, grid, rng, uncontrollable):
        gp_f, gp_g = _posteriors(kernel, grid, rng)
        ambiguity = AmbiguitySet(DiscreteDistribution.uniform(grid.n_w), 0.2)
        table = compute_bounds_table(gp_f, gp_g, 4.0, 4.0, 0.0, 0.0, 0.5, 0.1, ambiguity)
        return PolicyContext(t=1, grid=grid, gp_f=gp_f, gp_g=gp_g, table=table, ambiguity=ambiguity,
                             beta_f=4.0, beta_g=4.0, alpha=0.5, xi=0.1, eta=0.0, threshold_h=0.0,
                             uncontrollable=uncontrollable, rng=rng)

    def test_simulator_selection(self, kernel, small_grid, rng):
        ctx = self._context(kernel, small_grid, rng, uncontrollable=False)
        selection = ProposedPolicy().select(ctx)
        assert ctx.table.label(selection.x_index) is not Label.LOW
        assert 0 <= selection.w_index < small_grid.n_w

    def test_uncontrollable_selection_has_no_w(self, kernel, small_grid, rng):
        selection = ProposedPolicy().select(self._context(kernel, small_grid, rng, uncontrollable=True))
        assert selection.w_index is None
