"""Data model classes shared across the library."""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from drccbo.core.constants import Labels, Numerics, StopStatuses
from drccbo.core.exceptions import ConfigurationError, DimensionMismatchError


def _as_float_vector(values, name: str) -> np.ndarray:
    array = np.asarray(values, dtype=float).reshape(-1)
    if array.size == 0:
        raise ConfigurationError(f"{name} must be nonempty", name)
    return array


@dataclass(frozen=True, eq=False)
class GridSpace:
    """Finite design set X and environment set Omega, indexed row-major (x major)."""
    x_values: np.ndarray
    w_values: np.ndarray

    def __post_init__(self):
        x = _as_float_vector(self.x_values, "x_values")
        w = _as_float_vector(self.w_values, "w_values")
        for name, values in (("x_values", x), ("w_values", w)):
            if np.any(np.diff(values) <= 0):
                raise ConfigurationError("grid values must be strictly increasing", name)
        x.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "x_values", x)
        object.__setattr__(self, "w_values", w)

    @property
    def n_x(self) -> int:
        return int(self.x_values.size)

    @property
    def n_w(self) -> int:
        return int(self.w_values.size)

    @property
    def size(self) -> int:
        """Number of points of the product grid."""
        return self.n_x * self.n_w

    def flat_index(self, x_index: int, w_index: int) -> int:
        return int(x_index) * self.n_w + int(w_index)

    def unflatten(self, flat: int) -> Tuple[int, int]:
        x_index, w_index = divmod(int(flat), self.n_w)
        return x_index, w_index

    def point(self, x_index: int, w_index: int) -> Tuple[float, float]:
        """Real coordinates (x, w) of a grid point."""
        return float(self.x_values[x_index]), float(self.w_values[w_index])

    @cached_property
    def coordinates(self) -> np.ndarray:
        """Coordinates of every product-grid point, shape (size, 2)."""
        xx, ww = np.meshgrid(self.x_values, self.w_values, indexing="ij")
        coords = np.column_stack([xx.reshape(-1), ww.reshape(-1)])
        coords.setflags(write=False)
        return coords

    def describe(self) -> dict:
        return {
            "x_lo": float(self.x_values[0]), "x_hi": float(self.x_values[-1]), "n_x": self.n_x,
            "w_lo": float(self.w_values[0]), "w_hi": float(self.w_values[-1]), "n_w": self.n_w,
        }


@dataclass(frozen=True)
class KernelParams:
    """Gaussian kernel sigma^2 * exp(-|theta - theta'|^2 / L) plus observation noise."""
    signal_variance: float
    length_scale: float
    noise_variance: float

    def __post_init__(self):
        for name in ("signal_variance", "length_scale", "noise_variance"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ConfigurationError(f"must be strictly positive, got {value}", name)


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """Probability vector on Omega."""
    weights: np.ndarray

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if weights.size == 0:
            raise ConfigurationError("distribution must have at least one atom", "weights")
        if np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise ConfigurationError("weights must be finite and nonnegative", "weights")
        total = float(weights.sum())
        if abs(total - 1.0) > Numerics.DISTRIBUTION_SUM_TOL:
            raise ConfigurationError(f"weights must sum to 1, got {total!r}", "weights")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, size: int) -> 'DiscreteDistribution':
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def from_unnormalized(cls, masses) -> 'DiscreteDistribution':
        masses = np.asarray(masses, dtype=float)
        return cls(masses / masses.sum())

    @property
    def size(self) -> int:
        return int(self.weights.size)

    def expectation(self, values) -> float:
        values = np.asarray(values, dtype=float)
        if values.shape[-1] != self.size:
            raise DimensionMismatchError(self.size, values.shape[-1], "expectation values")
        return float(values @ self.weights)


@dataclass(frozen=True)
class AmbiguitySet:
    """All distributions within `radius` of `reference` (L1 distance)."""
    reference: DiscreteDistribution
    radius: float
    distance: str = "l1"

    def __post_init__(self):
        if not np.isfinite(self.radius) or self.radius < 0:
            raise ConfigurationError(f"radius must be >= 0, got {self.radius}", "radius")
        if self.distance != "l1":
            raise ConfigurationError(f"unsupported distance '{self.distance}'", "distance")


class Label(str, Enum):
    """Classification of a design point with respect to the chance constraint."""
    HIGH = Labels.HIGH
    LOW = Labels.LOW
    MAYBE = Labels.MAYBE


class StopKind(str, Enum):
    CONTINUE = StopStatuses.CONTINUE
    NO_SOLUTION = StopStatuses.NO_SOLUTION
    CONVERGED = StopStatuses.CONVERGED


@dataclass(frozen=True)
class StopStatus:
    """Outcome of the stopping rules; `recommendation` is set only when converged."""
    kind: StopKind
    recommendation: Optional[int] = None

    @property
    def terminal(self) -> bool:
        return self.kind is not StopKind.CONTINUE


@dataclass(frozen=True, eq=False)
class BoundsTable:
    """Per-design bounds of F_t and G_t with the H/L/M labels of one iteration."""
    lower_f: np.ndarray
    upper_f: np.ndarray
    lower_g: np.ndarray
    upper_g: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        n = len(self.labels)
        for name in ("lower_f", "upper_f", "lower_g", "upper_g"):
            values = np.asarray(getattr(self, name), dtype=float)
            if values.shape != (n,):
                raise DimensionMismatchError(n, values.size, name)
            object.__setattr__(self, name, values)
        object.__setattr__(self, "labels", np.asarray(self.labels, dtype="<U1"))

    @property
    def n_designs(self) -> int:
        return int(self.labels.size)

    def _indices(self, label: Label) -> np.ndarray:
        return np.flatnonzero(self.labels == label.value)

    @property
    def high(self) -> np.ndarray:
        return self._indices(Label.HIGH)

    @property
    def low(self) -> np.ndarray:
        return self._indices(Label.LOW)

    @property
    def maybe(self) -> np.ndarray:
        return self._indices(Label.MAYBE)

    @property
    def candidates(self) -> np.ndarray:
        """Indices of H union M, ascending."""
        return np.flatnonzero(self.labels != Label.LOW.value)

    def label(self, x_index: int) -> Label:
        return Label(str(self.labels[x_index]))

    def counts(self) -> Tuple[int, int, int]:
        return len(self.high), len(self.low), len(self.maybe)

    def recommendation(self) -> Optional[int]:
        """argmax of the lower F bound over H (lowest index on ties); None when H is empty."""
        high = self.high
        if high.size == 0:
            return None
        return int(high[np.argmax(self.lower_f[high])])

    def invariant_violations(self) -> List[str]:
        """Describe every violated ordering or partition property (empty when consistent)."""
        problems = []
        bad = np.flatnonzero(self.lower_f > self.upper_f)
        if bad.size:
            problems.append(f"lower_f > upper_f at {bad.tolist()}")
        bad = np.flatnonzero((self.lower_g < 0) | (self.lower_g > self.upper_g) | (self.upper_g > 1))
        if bad.size:
            problems.append(f"G bounds outside 0 <= lG <= uG <= 1 at {bad.tolist()}")
        n_high, n_low, n_maybe = self.counts()
        if n_high + n_low + n_maybe != self.n_designs:
            problems.append("labels do not partition the design set")
        return problems


@dataclass(frozen=True)
class Selection:
    """Point chosen by a policy; `w_index` is None when nature picks the environment."""
    x_index: int
    w_index: Optional[int] = None


@dataclass
class TraceRecord:
    """One iteration of the optimization loop."""
    t: int
    x_index: Optional[int]
    w_index: Optional[int]
    y_f: Optional[float]
    y_g: Optional[float]
    n_high: int
    n_low: int
    n_maybe: int
    c_best: float
    recommendation: Optional[int]
    utility_gap: float
    status: StopKind


@dataclass
class RunTrace:
    """Sequence of iteration records of one run."""
    method: str
    setting: str
    problem: str
    seed: int
    records: List[TraceRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def utility_gaps(self) -> np.ndarray:
        return np.array([record.utility_gap for record in self.records], dtype=float)

    @property
    def final_status(self) -> StopKind:
        if not self.records:
            return StopKind.CONTINUE
        return self.records[-1].status
