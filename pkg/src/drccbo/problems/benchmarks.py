"""Synthetic benchmark functions, grids and the true environment distribution."""

from typing import Sequence

import numpy as np
from scipy.stats import norm

from drccbo.core.constants import SyntheticDefaults
from drccbo.core.exceptions import ConfigurationError
from drccbo.core.models import DiscreteDistribution

# (weight, center, width) of each one-dimensional bump of the objective
_BUMPS = ((1.0, 0.0, 4.0), (0.6, 8.0, 3.0), (0.3, -9.0, 5.0))


def _bumps(v):
    v = np.asarray(v, dtype=float)
    return sum(weight * np.exp(-(v - center) ** 2 / width) for weight, center, width in _BUMPS)


def synthetic_f(x, w):
    """Sum of three Gaussian bumps in x and the same three in w; symmetric in (x, w)."""
    value = _bumps(x) + _bumps(w)
    return float(value) if np.ndim(value) == 0 else value


def synthetic_g(x, w):
    """0.26 (x^2 + w^2) - 0.48 x w, nonnegative everywhere."""
    x = np.asarray(x, dtype=float)
    w = np.asarray(w, dtype=float)
    value = 0.26 * (x ** 2 + w ** 2) - 0.48 * x * w
    return float(value) if np.ndim(value) == 0 else value


def make_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """n equally spaced values from lo to hi inclusive."""
    if n < 2:
        raise ConfigurationError(f"grid needs at least 2 points, got {n}", "n")
    if not lo < hi:
        raise ConfigurationError(f"grid bounds must satisfy lo < hi, got [{lo}, {hi}]", "lo")
    return np.linspace(lo, hi, int(n))


def true_mixture_distribution(w_values: Sequence[float],
                              means: Sequence[float] = SyntheticDefaults.MIXTURE_MEANS,
                              variance: float = SyntheticDefaults.MIXTURE_VARIANCE) -> DiscreteDistribution:
    """Equal-weight Gaussian mixture density evaluated on Omega and normalized."""
    w_values = np.asarray(w_values, dtype=float)
    if w_values.size == 0:
        raise ConfigurationError("environment grid is empty", "w_values")
    scale = np.sqrt(variance)
    density = sum(norm.pdf(w_values, loc=mean, scale=scale) for mean in means) / len(means)
    return DiscreteDistribution.from_unnormalized(density)
