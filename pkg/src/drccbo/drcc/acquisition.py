"""Acquisition function of the proposed method and its selection rules."""

import numpy as np

from drccbo.core.exceptions import InternalInconsistencyError, SelectionError
from drccbo.core.models import BoundsTable, Label
from drccbo.surrogate import GpPosterior
from drccbo.utils.numeric import first_argmax


def current_best(table: BoundsTable) -> float:
    """max lF over H; else min lF over M; else min lF over X."""
    high = table.high
    if high.size:
        return float(table.lower_f[high].max())
    maybe = table.maybe
    if maybe.size:
        return float(table.lower_f[maybe].min())
    return float(table.lower_f.min())


def _feasibility_factor(label: Label, l_G: float, u_G: float, alpha: float, xi: float,
                        x_index: int) -> float:
    if label is Label.HIGH:
        return 1.0
    if label is Label.LOW:
        return 0.0
    if u_G == l_G:
        raise InternalInconsistencyError(
            f"design {x_index} is labeled M but its G interval is degenerate (lG = uG = {l_G!r})")
    return (u_G - (alpha - xi)) / (u_G - l_G)


def acquisition(x_index: int, table: BoundsTable, cbest: float, alpha: float, xi: float) -> float:
    """a_t(x) = max(uF - c_best, 0) times the feasibility factor of x's label."""
    improvement = max(float(table.upper_f[x_index]) - cbest, 0.0)
    factor = _feasibility_factor(table.label(x_index), float(table.lower_g[x_index]),
                                 float(table.upper_g[x_index]), alpha, xi, x_index)
    return improvement * factor


def acquisition_values(table: BoundsTable, cbest: float, alpha: float, xi: float) -> np.ndarray:
    """acquisition() for every design; zero on L."""
    return np.array([acquisition(x, table, cbest, alpha, xi) for x in range(table.n_designs)])


def select_x(table: BoundsTable, values: np.ndarray) -> int:
    """argmax of the acquisition over H union M, lowest index on ties."""
    candidates = table.labels != Label.LOW.value
    if not candidates.any():
        raise SelectionError("no design left in H or M")
    return first_argmax(values, candidates)


def select_w_simulator(x_next: int, gp_f: GpPosterior, gp_g: GpPosterior) -> int:
    """argmax over Omega of the summed posterior variances at x_next."""
    total = gp_f.variance_grid[x_next] + gp_g.variance_grid[x_next]
    return first_argmax(total)
