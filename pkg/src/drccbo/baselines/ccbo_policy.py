"""Expected feasible improvement for the (non-robust) chance-constrained problem.

Z^F(x) = sum_w f(x, w) p(w) and Z^G(x) = sum_w 1[g(x, w) > h] p(w), with p the
reference distribution. Z^F is Gaussian under the f posterior; the probability
that Z^G exceeds alpha is estimated from joint samples of g over the Omega slice.
"""

from typing import Optional, Tuple

import numpy as np
from scipy.stats import norm

from drccbo.core.constants import BaselineDefaults, Methods
from drccbo.core.models import DiscreteDistribution, GridSpace, Selection
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy
from drccbo.surrogate import GpPosterior
from drccbo.utils.logger import get_logger
from drccbo.utils.numeric import first_argmax, first_argmin

logger = get_logger(__name__)

_OUTCOME_CHUNK = 25


def z_f_moments(gp_f: GpPosterior, x_index: int, reference: DiscreteDistribution) -> Tuple[float, float]:
    """Mean and variance of the reference-weighted objective at x."""
    p = reference.weights
    mean = float(gp_f.mean_grid[x_index] @ p)
    variance = float(p @ gp_f.slice_covariance(x_index) @ p)
    return mean, max(variance, 0.0)


def expected_improvement(mean, std, incumbent):
    """E[max(Z - incumbent, 0)] for Z ~ N(mean, std^2); elementwise over arrays."""
    mean, std, incumbent = np.broadcast_arrays(*(np.asarray(v, dtype=float)
                                                 for v in (mean, std, incumbent)))
    gap = mean - incumbent
    safe_std = np.where(std > 0, std, 1.0)
    u = gap / safe_std
    smooth = gap * norm.cdf(u) + safe_std * norm.pdf(u)
    value = np.where(std > 0, smooth, np.maximum(gap, 0.0))
    return float(value) if value.ndim == 0 else value


def expected_feasibility(mean_g: np.ndarray, std_g: np.ndarray, h: float,
                         reference: DiscreteDistribution) -> np.ndarray:
    """E[Z^G(x)] = sum_w Phi((mu_g - h) / sigma_g) p(w); trailing axis is Omega."""
    safe_std = np.where(std_g > 0, std_g, 1.0)
    prob = np.where(std_g > 0, norm.cdf((mean_g - h) / safe_std), (mean_g > h).astype(float))
    return prob @ reference.weights


def feasible_incumbent(mean_zf: np.ndarray, expected_zg: np.ndarray, alpha: float) -> np.ndarray:
    """
    c_feas: best expected objective among designs expected to be feasible.

    Args:
        mean_zf: E[Z^F(x)], shape (n_x,)
        expected_zg: E[Z^G(x)], shape (..., n_x)
        alpha: Chance-constraint level

    Returns:
        Array of shape expected_zg.shape[:-1]; when no design is expected feasible,
        E[Z^F] at the design of largest E[Z^G]
    """
    feasible = expected_zg > alpha
    best_feasible = np.where(feasible, mean_zf, -np.inf).max(axis=-1)
    fallback = mean_zf[np.argmax(expected_zg, axis=-1)]
    return np.where(feasible.any(axis=-1), best_feasible, fallback)


def _covariance_root(cov: np.ndarray) -> np.ndarray:
    values, vectors = np.linalg.eigh(0.5 * (cov + cov.T))
    return vectors * np.sqrt(np.clip(values, 0.0, None))


def feasibility_probability(slice_mean: np.ndarray, slice_cov: np.ndarray, normals: np.ndarray,
                            h: float, reference: DiscreteDistribution, alpha: float) -> float:
    """Monte Carlo estimate of P(Z^G(x) > alpha) from standard normals of shape (S, |Omega|)."""
    samples = slice_mean + normals @ _covariance_root(slice_cov).T
    z_g = (samples > h) @ reference.weights
    return float(np.mean(z_g > alpha))


def ccbo_scores(gp_f: GpPosterior, gp_g: GpPosterior, reference: DiscreteDistribution, h: float,
                alpha: float, normals: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    CCBO value of every design.

    Returns:
        (scores, mean of Z^F, standard deviation of Z^F), each of shape (n_x,)
    """
    n_x = gp_f.grid.n_x
    moments = np.array([z_f_moments(gp_f, x, reference) for x in range(n_x)])
    mean_zf, std_zf = moments[:, 0], np.sqrt(moments[:, 1])
    incumbent = feasible_incumbent(mean_zf, expected_feasibility(gp_g.mean_grid, gp_g.std_grid, h, reference),
                                   alpha)
    improvement = expected_improvement(mean_zf, std_zf, incumbent)
    probability = np.array([
        feasibility_probability(gp_g.mean_grid[x], gp_g.slice_covariance(x), normals, h, reference, alpha)
        for x in range(n_x)
    ])
    return improvement * probability, mean_zf, std_zf


def one_step_value_variance(gp_g: GpPosterior, x_next: int, w_star: int, mean_zf: np.ndarray,
                            std_zf: np.ndarray, reference: DiscreteDistribution, h: float,
                            alpha: float, normals: np.ndarray, outcomes: np.ndarray) -> float:
    """
    Variance over y* of the CCBO value at x_next after observing g at (x_next, w*).

    Args:
        gp_g: Posterior of the constraint function
        x_next: Selected design
        w_star: Candidate environment point
        mean_zf: E[Z^F] of every design (unchanged by a g observation)
        std_zf: Standard deviation of Z^F of every design
        reference: Reference distribution
        h: Constraint threshold
        alpha: Chance-constraint level
        normals: Standard normals (S, |Omega|) shared by every candidate
        outcomes: Standardized hypothetical outcomes Z, y* = mu + s Z

    Returns:
        Sample variance of the one-step CCBO value
    """
    update = gp_g.one_step_update(x_next, w_star)
    cov_to_star = gp_g.covariance_with(x_next, w_star)[x_next]
    shrunk = gp_g.slice_covariance(x_next) - np.outer(cov_to_star, cov_to_star) / update.predictive_std ** 2
    base = normals @ _covariance_root(shrunk).T
    p = reference.weights

    values = []
    for start in range(0, outcomes.size, _OUTCOME_CHUNK):
        z = outcomes[start:start + _OUTCOME_CHUNK]
        slice_mean = update.mean[x_next] + update.slope[x_next] * z[:, None]
        z_g = (slice_mean[:, None, :] + base[None, :, :] > h) @ p
        probability = np.mean(z_g > alpha, axis=1)

        mean_g = update.mean[None] + update.slope[None] * z[:, None, None]
        incumbent = feasible_incumbent(mean_zf, expected_feasibility(mean_g, update.std, h, reference), alpha)
        improvement = expected_improvement(mean_zf[x_next], std_zf[x_next], incumbent)
        values.append(improvement * probability)
    return float(np.var(np.concatenate(values)))


def ccbo_select(gp_f: GpPosterior, gp_g: GpPosterior, grid: GridSpace, reference: DiscreteDistribution,
                h: float, alpha: float, rng: np.random.Generator,
                mc_samples: int = BaselineDefaults.CCBO_MC_SAMPLES,
                uncontrollable: bool = False) -> Selection:
    """
    x maximizes the CCBO value; w minimizes the variance of its one-step value.

    Args:
        gp_f: Posterior of the objective
        gp_g: Posterior of the constraint function
        grid: Product grid
        reference: Reference distribution standing in for the true one
        h: Constraint threshold
        alpha: Chance-constraint level
        rng: Policy random stream
        mc_samples: Monte Carlo sample count for both estimates
        uncontrollable: Whether nature draws w

    Returns:
        Selection
    """
    normals = rng.standard_normal((mc_samples, grid.n_w))
    scores, mean_zf, std_zf = ccbo_scores(gp_f, gp_g, reference, h, alpha, normals)
    x_next = first_argmax(scores)
    if uncontrollable:
        return Selection(x_next)

    outcomes = rng.standard_normal(mc_samples)
    variances = [
        one_step_value_variance(gp_g, x_next, w_star, mean_zf, std_zf, reference, h, alpha, normals, outcomes)
        for w_star in range(grid.n_w)
    ]
    return Selection(x_next, first_argmin(variances))


class CcboPolicy(SelectionPolicy):
    name = Methods.CCBO

    def select(self, ctx: PolicyContext) -> Selection:
        samples = self.settings.ccbo_mc_samples if self.settings else BaselineDefaults.CCBO_MC_SAMPLES
        return ccbo_select(ctx.gp_f, ctx.gp_g, ctx.grid, ctx.ambiguity.reference, ctx.threshold_h,
                           ctx.alpha, ctx.rng, samples, ctx.uncontrollable)
