"""Credible intervals of f, g, the feasibility indicator, F_t and G_t, and H/L/M labels."""

from typing import Tuple

import numpy as np

from drccbo.ambiguity import worst_case_expectation_batch
from drccbo.core.exceptions import ConfigurationError
from drccbo.core.models import AmbiguitySet, BoundsTable, Label
from drccbo.surrogate import GpPosterior


def credible_interval(gp: GpPosterior, x_index: int, w_index: int, beta: float) -> Tuple[float, float]:
    """(mu - sqrt(beta) sigma, mu + sqrt(beta) sigma) at one grid point."""
    if beta < 0:
        raise ConfigurationError(f"beta must be nonnegative, got {beta}", "beta")
    mean, variance = gp.posterior_at(x_index, w_index)
    width = np.sqrt(beta) * np.sqrt(variance)
    return float(mean - width), float(mean + width)


def credible_envelopes(gp: GpPosterior, beta: float) -> Tuple[np.ndarray, np.ndarray]:
    """Lower and upper credible envelopes over the whole grid, each (n_x, n_w)."""
    if beta < 0:
        raise ConfigurationError(f"beta must be nonnegative, got {beta}", "beta")
    width = np.sqrt(beta) * gp.std_grid
    mean = gp.mean_grid
    return mean - width, mean + width


def indicator_interval(l_g: float, u_g: float, h: float, eta: float) -> Tuple[int, int]:
    """Interval of 1[g > h]: [1,1] if l_g > h - eta, [0,1] if u_g > h, else [0,0]."""
    if l_g > h - eta:
        return 1, 1
    if u_g > h:
        return 0, 1
    return 0, 0


def indicator_envelopes(lower_g: np.ndarray, upper_g: np.ndarray, h: float,
                        eta: float) -> Tuple[np.ndarray, np.ndarray]:
    """Elementwise indicator_interval over arrays of g bounds."""
    certain = lower_g > h - eta
    lower = certain.astype(float)
    upper = (certain | (upper_g > h)).astype(float)
    return lower, upper


def f_bounds(x_index: int, gp_f: GpPosterior, beta_f: float,
             ambiguity: AmbiguitySet) -> Tuple[float, float]:
    """Worst-case expectations of the lower and upper f envelopes over the Omega slice at x."""
    lower, upper = credible_envelopes(gp_f, beta_f)
    values = worst_case_expectation_batch(np.stack([lower[x_index], upper[x_index]]), ambiguity)
    return float(values[0]), float(values[1])


def g_bounds(x_index: int, gp_g: GpPosterior, beta_g: float, h: float, eta: float,
             ambiguity: AmbiguitySet) -> Tuple[float, float]:
    """Worst-case expectations of the indicator envelopes at x; both in [0, 1]."""
    lower, upper = credible_envelopes(gp_g, beta_g)
    ind_lower, ind_upper = indicator_envelopes(lower[x_index], upper[x_index], h, eta)
    values = worst_case_expectation_batch(np.stack([ind_lower, ind_upper]), ambiguity)
    return float(values[0]), float(values[1])


def classify(l_G: float, u_G: float, alpha: float, xi: float) -> Label:
    """H if l_G > alpha - xi; L if additionally u_G <= alpha; M otherwise."""
    if l_G > alpha - xi:
        return Label.HIGH
    if u_G <= alpha:
        return Label.LOW
    return Label.MAYBE


def classify_all(lower_G: np.ndarray, upper_G: np.ndarray, alpha: float, xi: float) -> np.ndarray:
    return np.where(lower_G > alpha - xi, Label.HIGH.value,
                    np.where(upper_G <= alpha, Label.LOW.value, Label.MAYBE.value))


def compute_bounds_table(gp_f: GpPosterior, gp_g: GpPosterior, beta_f: float, beta_g: float,
                         h: float, eta: float, alpha: float, xi: float,
                         ambiguity: AmbiguitySet) -> BoundsTable:
    """
    Bounds of F_t and G_t at every design plus their classification.

    Args:
        gp_f: Posterior of the objective
        gp_g: Posterior of the constraint function
        beta_f: Confidence width parameter for f
        beta_g: Confidence width parameter for g
        h: Constraint threshold
        eta: Overestimation parameter
        alpha: Chance-constraint level
        xi: Accuracy parameter
        ambiguity: Current ambiguity set

    Returns:
        BoundsTable covering X
    """
    lower_f, upper_f = credible_envelopes(gp_f, beta_f)
    lower_g, upper_g = credible_envelopes(gp_g, beta_g)
    ind_lower, ind_upper = indicator_envelopes(lower_g, upper_g, h, eta)

    lF = worst_case_expectation_batch(lower_f, ambiguity)
    uF = worst_case_expectation_batch(upper_f, ambiguity)
    lG = worst_case_expectation_batch(ind_lower, ambiguity)
    uG = worst_case_expectation_batch(ind_upper, ambiguity)
    # the greedy order differs between envelopes; keep the ordering exact under rounding
    uF = np.maximum(uF, lF)
    uG = np.maximum(uG, lG)
    return BoundsTable(lF, uF, lG, uG, classify_all(lG, uG, alpha, xi))
