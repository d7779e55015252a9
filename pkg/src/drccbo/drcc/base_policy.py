"""Base class and shared state of selection policies."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from drccbo.core.models import AmbiguitySet, BoundsTable, DiscreteDistribution, GridSpace, Selection
from drccbo.surrogate import GpPosterior


@dataclass(frozen=True, eq=False)
class PolicyContext:
    """Everything a policy may read at one iteration. Policies must not mutate it."""
    t: int
    grid: GridSpace
    gp_f: GpPosterior
    gp_g: GpPosterior
    table: BoundsTable
    ambiguity: AmbiguitySet
    beta_f: float
    beta_g: float
    alpha: float
    xi: float
    eta: float
    threshold_h: float
    uncontrollable: bool
    rng: np.random.Generator
    observed_w: Sequence[int] = field(default_factory=tuple)

    @property
    def environment_weights(self) -> DiscreteDistribution:
        """Empirical distribution of the environment draws seen so far (reference if none)."""
        if len(self.observed_w) == 0:
            return self.ambiguity.reference
        counts = np.bincount(np.asarray(self.observed_w, dtype=int), minlength=self.grid.n_w)
        return DiscreteDistribution(counts / counts.sum())


class SelectionPolicy(ABC):
    """Chooses the next evaluation point from the frozen state of one iteration."""

    name: str = "policy"

    def __init__(self, settings: Optional[object] = None):
        """
        Initialize policy.

        Args:
            settings: Optional BaselineSettings for policies that use them
        """
        self.settings = settings

    @abstractmethod
    def select(self, ctx: PolicyContext) -> Selection:
        """
        Choose the next point.

        Args:
            ctx: Current iteration state

        Returns:
            Selection with a w index in the simulator setting and without one otherwise
        """

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
