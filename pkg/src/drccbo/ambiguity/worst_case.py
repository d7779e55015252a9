"""L1 ambiguity sets on the probability simplex and their worst-case expectations.

The infimum of sum_w c(w) p(w) over {p in simplex : |p - p*|_1 <= eps} has a
greedy solution: move a total mass of at most eps / 2 from the most expensive
coordinates (each capped by its reference mass) onto one cheapest coordinate.
Moving mass delta uses 2 * delta of the L1 budget.
"""

from typing import Sequence, Union

import numpy as np

from drccbo.core.exceptions import ConfigurationError, DimensionMismatchError
from drccbo.core.models import AmbiguitySet, DiscreteDistribution, GridSpace


def l1_distance(p: DiscreteDistribution, q: DiscreteDistribution) -> float:
    """Sum of absolute weight differences, in [0, 2]."""
    if p.size != q.size:
        raise DimensionMismatchError(p.size, q.size, "distribution")
    return float(np.abs(p.weights - q.weights).sum())


def worst_case_expectation_batch(costs: np.ndarray, ambiguity: AmbiguitySet) -> np.ndarray:
    """
    Worst-case (smallest) expectation of many cost vectors at once.

    Args:
        costs: Array of shape (..., |Omega|); the last axis is indexed by Omega
        ambiguity: L1 ball around a reference distribution

    Returns:
        Array of shape costs.shape[:-1]
    """
    costs = np.asarray(costs, dtype=float)
    weights = ambiguity.reference.weights
    if costs.shape[-1] != weights.size:
        raise DimensionMismatchError(weights.size, costs.shape[-1], "cost vector")

    nominal = costs @ weights
    lowest = costs.min(axis=-1)
    highest = costs.max(axis=-1)
    if ambiguity.radius == 0:
        return np.clip(nominal, lowest, highest)

    # stable sort of -c: equal costs keep ascending index order
    order = np.argsort(-costs, axis=-1, kind="stable")
    sorted_costs = np.take_along_axis(costs, order, axis=-1)
    sorted_mass = weights[order]
    mass_before = np.cumsum(sorted_mass, axis=-1) - sorted_mass
    moved = np.clip(ambiguity.radius / 2.0 - mass_before, 0.0, sorted_mass)
    savings = np.sum(moved * (sorted_costs - lowest[..., None]), axis=-1)
    return np.clip(nominal - savings, lowest, highest)


def worst_case_expectation(costs: Union[Sequence[float], np.ndarray], ambiguity: AmbiguitySet) -> float:
    """inf over the ambiguity set of sum_w costs(w) p(w)."""
    costs = np.asarray(costs, dtype=float)
    if costs.ndim != 1:
        raise DimensionMismatchError(1, costs.ndim, "cost vector rank")
    return float(worst_case_expectation_batch(costs, ambiguity))


def empirical_reference(observed: Sequence[int], omega_size: Union[int, GridSpace]) -> DiscreteDistribution:
    """
    Empirical distribution of observed environment indices.

    Args:
        observed: Environment indices seen so far
        omega_size: |Omega|, or the grid it is taken from

    Returns:
        DiscreteDistribution with weight count(w) / t
    """
    size = omega_size.n_w if isinstance(omega_size, GridSpace) else int(omega_size)
    observed = np.asarray(observed, dtype=int)
    if observed.size == 0:
        raise ConfigurationError("empirical distribution needs at least one observation", "observed")
    if observed.min() < 0 or observed.max() >= size:
        raise ConfigurationError(f"environment index outside 0..{size - 1}", "observed")
    counts = np.bincount(observed, minlength=size)
    return DiscreteDistribution(counts / observed.size)


def epsilon_schedule(t: int, omega_size: int, delta: float) -> float:
    """Data-driven radius |Omega| sqrt(log(|Omega| pi^2 t^2 / (3 delta)) / (2t)); not clipped at 2."""
    if t < 1:
        raise ConfigurationError(f"iteration index must be >= 1, got {t}", "t")
    log_term = np.log(omega_size * np.pi ** 2 * t ** 2 / (3.0 * delta))
    return float(omega_size * np.sqrt(log_term / (2.0 * t)))
