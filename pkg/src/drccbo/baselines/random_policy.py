"""Uniformly random selection."""

import numpy as np

from drccbo.core.constants import Methods
from drccbo.core.models import GridSpace, Selection
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy


def random_select(grid: GridSpace, rng: np.random.Generator, uncontrollable: bool = False) -> Selection:
    """Uniform over X x Omega, or over X when nature draws w."""
    if uncontrollable:
        return Selection(int(rng.integers(grid.n_x)))
    x_index, w_index = grid.unflatten(int(rng.integers(grid.size)))
    return Selection(x_index, w_index)


class RandomPolicy(SelectionPolicy):
    name = Methods.RANDOM

    def select(self, ctx: PolicyContext) -> Selection:
        return random_select(ctx.grid, ctx.rng, ctx.uncontrollable)
