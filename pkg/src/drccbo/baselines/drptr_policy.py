"""Classification-improvement policy for the DR chance constraint, combined with RMILE.

After a hypothetical observation y* = mu(q*) + s Z at q* = (x*, w*), the lower
credible bound of g at every point is affine in Z: intercept + slope * Z. Each
indicator bound therefore flips at one crossing value of Z, so the lower bound
of G at a design is a step function of Z with at most |Omega| steps, and its
expectation is a finite sum of Gaussian segment masses.
"""

from typing import Optional, Tuple

import numpy as np
from scipy.stats import norm

from drccbo.ambiguity import worst_case_expectation_batch
from drccbo.core.constants import BaselineDefaults, Methods
from drccbo.core.exceptions import ConfigurationError
from drccbo.core.models import AmbiguitySet, BoundsTable, DiscreteDistribution, GridSpace, Selection
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy
from drccbo.surrogate import GpPosterior
from drccbo.utils.numeric import first_argmax

# Beyond this many standard deviations a segment carries no mass in double precision.
_Z_CUTOFF = 40.0


def zeta_cutoff(zeta: Optional[float], omega_size: int) -> float:
    """
    Crossing cutoff that keeps the error of each design's probability within zeta.

    A crossing beyond |z| only changes the step function on a tail of mass
    Phi(-|z|); a design has at most |Omega| crossings.

    Args:
        zeta: Error budget per design, or None for the exact computation
        omega_size: |Omega|

    Returns:
        Cutoff in standard deviations, in [0, 40]
    """
    if zeta is None:
        return _Z_CUTOFF
    if zeta <= 0:
        raise ConfigurationError(f"zeta must be positive, got {zeta}", "drptr_zeta")
    return float(np.clip(norm.isf(zeta / omega_size), 0.0, _Z_CUTOFF))


def one_step_lower_envelope(gp: GpPosterior, x_star: int, w_star: int,
                            beta: float) -> Tuple[np.ndarray, np.ndarray]:
    """(intercept, slope) grids of the lower bound after observing at (x*, w*), each (n_x, n_w)."""
    update = gp.one_step_update(x_star, w_star)
    return update.mean - np.sqrt(beta) * update.std, update.slope


def _lower_envelope_coefficients(mean: np.ndarray, variance: np.ndarray, cov: np.ndarray,
                                 predictive_variance: float, beta: float) -> Tuple[np.ndarray, np.ndarray]:
    slope = cov / np.sqrt(predictive_variance)
    new_std = np.sqrt(np.clip(variance - cov ** 2 / predictive_variance, 0.0, None))
    return mean - np.sqrt(beta) * new_std, slope


def _segments(crossings: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Interior point and standard-normal mass of each segment cut by sorted crossings (rows)."""
    first = crossings[:, :1]
    last = crossings[:, -1:]
    points = np.concatenate([
        first - (1.0 + np.abs(first)),
        0.5 * (crossings[:, :-1] + crossings[:, 1:]),
        last + (1.0 + np.abs(last)),
    ], axis=1)
    rows = crossings.shape[0]
    edges = np.concatenate([np.zeros((rows, 1)), norm.cdf(crossings), np.ones((rows, 1))], axis=1)
    return points, np.diff(edges, axis=1)


def expected_classification_improvement(intercept: np.ndarray, slope: np.ndarray,
                                        ambiguity: AmbiguitySet, h: float, eta: float,
                                        alpha: float, cutoff: float = _Z_CUTOFF) -> float:
    """
    Sum over designs of P_Z(lower G bound after the update > alpha), computed exactly.

    Args:
        intercept: Lower-bound intercepts over the Omega slices of M, shape (m, |Omega|)
        slope: Lower-bound slopes in Z, same shape
        ambiguity: Current ambiguity set
        h: Constraint threshold
        eta: Overestimation parameter
        alpha: Chance-constraint level
        cutoff: Crossings farther than this many standard deviations are dropped

    Returns:
        Expected number of M designs whose lower G bound exceeds alpha
    """
    intercept = np.atleast_2d(intercept)
    slope = np.atleast_2d(slope)
    if intercept.shape[0] == 0:
        return 0.0
    threshold = h - eta
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        crossings = (threshold - intercept) / slope
    # a flat or far-away crossing keeps its Z = 0 value on every segment with mass
    fixed = ~np.isfinite(crossings) | (np.abs(crossings) > cutoff)
    slope = np.where(fixed, 0.0, slope)
    crossings = np.sort(np.where(fixed, 0.0, crossings), axis=1)

    points, mass = _segments(crossings)
    certain = intercept[:, None, :] + slope[:, None, :] * points[:, :, None] > threshold
    lower_G = worst_case_expectation_batch(certain.astype(float), ambiguity)
    return float(np.sum(mass * (lower_G > alpha)))


def rmile(intercept: np.ndarray, slope: np.ndarray, h: float) -> float:
    """Sum over points of P_Z(intercept + slope Z > h)."""
    magnitude = np.abs(slope)
    with np.errstate(divide="ignore", invalid="ignore"):
        prob = norm.cdf((intercept - h) / magnitude)
    prob = np.where(magnitude > 0, prob, (intercept > h).astype(float))
    return float(np.sum(prob))


def drptr_scores(gp_g: GpPosterior, table: BoundsTable, ambiguity: AmbiguitySet, beta_g: float,
                 h: float, eta: float, alpha: float,
                 gamma: float = BaselineDefaults.DRPTR_GAMMA, zeta: Optional[float] = None) -> np.ndarray:
    """max(classification improvement, gamma RMILE) for every candidate point, shape (n_x, n_w)."""
    grid = gp_g.grid
    scores = np.zeros(grid.size)
    maybe = table.maybe
    if maybe.size == 0:
        return scores.reshape(grid.n_x, grid.n_w)

    rows = np.concatenate([gp_g.slice_indices(x) for x in maybe])
    cov = gp_g.posterior_covariance(rows)
    mean = gp_g.mean_flat[rows]
    variance = gp_g.variance_flat[rows]
    predictive = gp_g.variance_flat + gp_g.kernel.noise_variance
    shape = (maybe.size, grid.n_w)
    cutoff = zeta_cutoff(zeta, grid.n_w)

    for candidate in range(grid.size):
        intercept, slope = _lower_envelope_coefficients(mean, variance, cov[:, candidate],
                                                        predictive[candidate], beta_g)
        intercept = intercept.reshape(shape)
        slope = slope.reshape(shape)
        improvement = expected_classification_improvement(intercept, slope, ambiguity, h, eta, alpha, cutoff)
        scores[candidate] = max(improvement, gamma * rmile(intercept, slope, h))
    return scores.reshape(grid.n_x, grid.n_w)


def drptr_select(gp_g: GpPosterior, table: BoundsTable, grid: GridSpace, ambiguity: AmbiguitySet,
                 beta_g: float, h: float, eta: float, alpha: float,
                 gamma: float = BaselineDefaults.DRPTR_GAMMA, uncontrollable: bool = False,
                 environment: Optional[DiscreteDistribution] = None, zeta: Optional[float] = None) -> Selection:
    """Best candidate by score; uncontrollable settings average the score over w first."""
    scores = drptr_scores(gp_g, table, ambiguity, beta_g, h, eta, alpha, gamma, zeta)
    if uncontrollable:
        if environment is None:
            raise ConfigurationError("uncontrollable DRPTR needs the empirical distribution of w", "environment")
        return Selection(first_argmax(scores @ environment.weights))
    return Selection(*grid.unflatten(first_argmax(scores.reshape(-1))))


class DrptrPolicy(SelectionPolicy):
    name = Methods.DRPTR

    def select(self, ctx: PolicyContext) -> Selection:
        if self.settings is not None:
            gamma, zeta = self.settings.drptr_gamma, self.settings.zeta(ctx.grid.n_w)
        else:
            gamma, zeta = BaselineDefaults.DRPTR_GAMMA, None
        return drptr_select(ctx.gp_g, ctx.table, ctx.grid, ctx.ambiguity, ctx.beta_g,
                            ctx.threshold_h, ctx.eta, ctx.alpha, gamma,
                            ctx.uncontrollable, ctx.environment_weights, zeta)
