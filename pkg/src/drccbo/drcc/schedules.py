"""Confidence-width and overestimation schedules."""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from drccbo.core.constants import BetaModes, EtaModes
from drccbo.core.exceptions import ConfigurationError


def beta_schedule(t: int, product_size: int, delta: float) -> float:
    """beta_t = 2 log(2 |X x Omega| pi^2 t^2 / (3 delta)); increasing in t."""
    if t < 1:
        raise ConfigurationError(f"iteration index must be >= 1, got {t}", "t")
    return float(2.0 * np.log(2.0 * product_size * np.pi ** 2 * t ** 2 / (3.0 * delta)))


def eta_parameter(xi: float, delta: float, sigma0min_g: float, product_size: int) -> float:
    """
    Overestimation parameter of the indicator interval.

    Args:
        xi: Accuracy parameter
        delta: Confidence level
        sigma0min_g: Smallest prior standard deviation of g over the grid
        product_size: |X x Omega|

    Returns:
        min(xi s / 2, xi^2 delta s / (8 |X x Omega|)) with s = sigma0min_g
    """
    for name, value in (("xi", xi), ("delta", delta), ("sigma0min_g", sigma0min_g),
                        ("product_size", product_size)):
        if value <= 0:
            raise ConfigurationError(f"{name} must be positive, got {value}", name)
    return float(min(xi * sigma0min_g / 2.0,
                     xi ** 2 * delta * sigma0min_g / (8.0 * product_size)))


@dataclass(frozen=True)
class ScheduleParams:
    """Algorithm constants plus the beta schedule of one run."""
    delta: float
    xi: float
    eta: float
    alpha: float
    threshold_h: float
    beta_mode: str = BetaModes.THEORETICAL
    sqrt_beta_f: Optional[float] = None
    sqrt_beta_g: Optional[float] = None

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ConfigurationError(f"alpha must lie in (0, 1), got {self.alpha}", "alpha")
        if not 0 < self.delta < 1:
            raise ConfigurationError(f"delta must lie in (0, 1), got {self.delta}", "delta")
        if self.xi <= 0:
            raise ConfigurationError(f"xi must be positive, got {self.xi}", "xi")
        if self.eta < 0:
            raise ConfigurationError(f"eta must be nonnegative, got {self.eta}", "eta")
        if self.beta_mode == BetaModes.FIXED:
            if self.sqrt_beta_f is None or self.sqrt_beta_g is None:
                raise ConfigurationError("fixed beta mode needs sqrt_beta_f and sqrt_beta_g", "beta")
        elif self.beta_mode != BetaModes.THEORETICAL:
            raise ConfigurationError(f"unknown beta mode '{self.beta_mode}'", "beta")

    def betas(self, t: int, product_size: int) -> Tuple[float, float]:
        """(beta_f, beta_g) at iteration t."""
        if self.beta_mode == BetaModes.FIXED:
            return self.sqrt_beta_f ** 2, self.sqrt_beta_g ** 2
        beta = beta_schedule(t, product_size, self.delta)
        return beta, beta

    @classmethod
    def from_config(cls, config, sigma0min_g: float, product_size: int) -> 'ScheduleParams':
        """Build from an ExperimentConfig; sigma0min_g is the smallest prior std of g."""
        eta = 0.0
        if config.eta_mode == EtaModes.THEORETICAL:
            eta = eta_parameter(config.xi, config.delta, sigma0min_g, product_size)
        return cls(
            delta=config.delta,
            xi=config.xi,
            eta=eta,
            alpha=config.effective_alpha,
            threshold_h=config.threshold_h,
            beta_mode=config.beta.mode,
            sqrt_beta_f=config.beta.sqrt_beta_f,
            sqrt_beta_g=config.beta.sqrt_beta_g,
        )
