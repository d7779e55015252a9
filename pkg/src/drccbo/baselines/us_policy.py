"""Uncertainty sampling on the larger of the two posterior variances."""

from typing import Optional

import numpy as np

from drccbo.core.constants import Methods
from drccbo.core.exceptions import ConfigurationError
from drccbo.core.models import DiscreteDistribution, GridSpace, Selection
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy
from drccbo.surrogate import GpPosterior
from drccbo.utils.numeric import first_argmax


def uncertainty_scores(gp_f: GpPosterior, gp_g: GpPosterior) -> np.ndarray:
    """max(sigma_f^2, sigma_g^2) at every grid point, shape (n_x, n_w)."""
    return np.maximum(gp_f.variance_grid, gp_g.variance_grid)


def us_select(gp_f: GpPosterior, gp_g: GpPosterior, grid: GridSpace, uncontrollable: bool = False,
              environment: Optional[DiscreteDistribution] = None) -> Selection:
    """
    Most uncertain point (simulator) or design of largest expected uncertainty.

    Args:
        gp_f: Posterior of the objective
        gp_g: Posterior of the constraint function
        grid: Product grid
        uncontrollable: Whether nature draws w
        environment: Empirical distribution of w, required when uncontrollable

    Returns:
        Selection
    """
    scores = uncertainty_scores(gp_f, gp_g)
    if uncontrollable:
        if environment is None:
            raise ConfigurationError("uncontrollable uncertainty sampling needs the empirical distribution of w",
                                     "environment")
        return Selection(first_argmax(scores @ environment.weights))
    return Selection(*grid.unflatten(first_argmax(scores.reshape(-1))))


class UncertaintySamplingPolicy(SelectionPolicy):
    name = Methods.US

    def select(self, ctx: PolicyContext) -> Selection:
        return us_select(ctx.gp_f, ctx.gp_g, ctx.grid, ctx.uncontrollable, ctx.environment_weights)
