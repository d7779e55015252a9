"""Gaussian-process regression over the product grid X x Omega.

The posterior is kept in whitened form: with L the Cholesky factor of the
regularized Gram matrix K_t + noise * I, the state stores

    z = L^-1 y            (whitened targets)
    V = L^-1 K(obs, grid) (whitened cross-covariances to every grid point)

so that mean = V^T z and variance = k(q, q) - |V[:, q]|^2 over the whole grid.
Adding an observation extends L by one row and V, z by one entry each.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Tuple

import numpy as np
from numpy.linalg import LinAlgError
from scipy.linalg import cholesky, solve_triangular
from scipy.spatial.distance import cdist

from drccbo.core.constants import Numerics
from drccbo.core.exceptions import ConfigurationError, NumericalError
from drccbo.core.models import GridSpace, KernelParams
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)

Observation = Tuple[int, int, float]


def kernel_eval(params: KernelParams, a, b) -> float:
    """Gaussian kernel between two points given by real coordinates (x, w)."""
    diff = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    return float(params.signal_variance * np.exp(-float(diff @ diff) / params.length_scale))


def kernel_matrix(params: KernelParams, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kernel matrix between two coordinate arrays of shape (n, 2) and (m, 2)."""
    squared = cdist(np.atleast_2d(a), np.atleast_2d(b), "sqeuclidean")
    return params.signal_variance * np.exp(-squared / params.length_scale)


def _cholesky_with_jitter(gram: np.ndarray, params: KernelParams) -> np.ndarray:
    try:
        return cholesky(gram, lower=True)
    except LinAlgError:
        jitter = Numerics.CHOLESKY_JITTER * params.signal_variance
        logger.warning(f"Cholesky failed on {gram.shape[0]}x{gram.shape[0]} Gram matrix, "
                       f"retrying with jitter {jitter:g}")
    try:
        return cholesky(gram + jitter * np.eye(gram.shape[0]), lower=True)
    except LinAlgError as e:
        raise NumericalError("regularized Gram matrix is not positive definite",
                             {"size": gram.shape[0], "noise_variance": params.noise_variance}) from e


@dataclass(frozen=True)
class OneStepUpdate:
    """Posterior over the grid after a hypothetical observation y* at one point.

    With y* = mean(q) + predictive_std * Z and Z standard normal, the updated mean
    at every grid point is `mean + slope * Z` and the updated standard deviation
    is `std` (independent of y*). Arrays have shape (n_x, n_w).
    """
    mean: np.ndarray
    slope: np.ndarray
    std: np.ndarray
    predictive_std: float


@dataclass(frozen=True, eq=False)
class GpPosterior:
    """Immutable GP posterior for one black-box function on a product grid."""
    kernel: KernelParams
    grid: GridSpace
    x_indices: np.ndarray
    w_indices: np.ndarray
    values: np.ndarray
    chol: np.ndarray = field(repr=False)
    whitened_targets: np.ndarray = field(repr=False)
    whitened_cross: np.ndarray = field(repr=False)

    @classmethod
    def prior(cls, kernel: KernelParams, grid: GridSpace) -> 'GpPosterior':
        empty_int = np.zeros(0, dtype=int)
        return cls(kernel, grid, empty_int, empty_int.copy(), np.zeros(0),
                   np.zeros((0, 0)), np.zeros(0), np.zeros((0, grid.size)))

    @classmethod
    def from_observations(cls, kernel: KernelParams, grid: GridSpace,
                          observations: Iterable[Observation]) -> 'GpPosterior':
        """Build the posterior from scratch (single Cholesky of the full Gram matrix)."""
        observations = list(observations)
        if not observations:
            return cls.prior(kernel, grid)
        x_idx = np.array([int(o[0]) for o in observations], dtype=int)
        w_idx = np.array([int(o[1]) for o in observations], dtype=int)
        y = np.array([float(o[2]) for o in observations], dtype=float)
        _check_indices(grid, x_idx, w_idx)
        if not np.all(np.isfinite(y)):
            raise NumericalError("observed values must be finite")

        flat = x_idx * grid.n_w + w_idx
        obs_coords = grid.coordinates[flat]
        gram = kernel_matrix(kernel, obs_coords, obs_coords)
        gram[np.diag_indices_from(gram)] += kernel.noise_variance
        chol = _cholesky_with_jitter(gram, kernel)
        cross = kernel_matrix(kernel, obs_coords, grid.coordinates)
        whitened_cross = solve_triangular(chol, cross, lower=True)
        whitened_targets = solve_triangular(chol, y, lower=True)
        return cls(kernel, grid, x_idx, w_idx, y, chol, whitened_targets, whitened_cross)

    @property
    def n_observations(self) -> int:
        return int(self.values.size)

    @property
    def observations(self) -> Tuple[Observation, ...]:
        return tuple(zip(self.x_indices.tolist(), self.w_indices.tolist(), self.values.tolist()))

    def add_observation(self, x_index: int, w_index: int, y: float) -> 'GpPosterior':
        """Posterior after one more observation; `self` is left untouched."""
        _check_indices(self.grid, np.array([x_index]), np.array([w_index]))
        if not np.isfinite(y):
            raise NumericalError("observed value must be finite", {"x": x_index, "w": w_index})

        flat = self.grid.flat_index(x_index, w_index)
        link = self.whitened_cross[:, flat]
        pivot_sq = self._prior_diagonal[flat] + self.kernel.noise_variance - float(link @ link)
        if not pivot_sq > 0.5 * self.kernel.noise_variance:
            # lost precision in the rank-one extension; refactor from scratch
            logger.debug(f"rebuilding Cholesky factor at n={self.n_observations + 1}")
            return GpPosterior.from_observations(
                self.kernel, self.grid, self.observations + ((int(x_index), int(w_index), float(y)),))

        pivot = np.sqrt(pivot_sq)
        n = self.n_observations
        chol = np.zeros((n + 1, n + 1))
        chol[:n, :n] = self.chol
        chol[n, :n] = link
        chol[n, n] = pivot

        cross_row = kernel_matrix(self.kernel, self.grid.coordinates[flat], self.grid.coordinates)[0]
        new_row = (cross_row - link @ self.whitened_cross) / pivot
        new_target = (float(y) - float(link @ self.whitened_targets)) / pivot

        return GpPosterior(
            self.kernel, self.grid,
            np.append(self.x_indices, int(x_index)),
            np.append(self.w_indices, int(w_index)),
            np.append(self.values, float(y)),
            chol,
            np.append(self.whitened_targets, new_target),
            np.vstack([self.whitened_cross, new_row]),
        )

    @cached_property
    def _prior_diagonal(self) -> np.ndarray:
        # stationary kernel: every diagonal entry is the signal variance
        return np.full(self.grid.size, self.kernel.signal_variance)

    @cached_property
    def _flat_mean(self) -> np.ndarray:
        return self.whitened_cross.T @ self.whitened_targets

    @cached_property
    def _flat_variance(self) -> np.ndarray:
        reduction = np.einsum("ij,ij->j", self.whitened_cross, self.whitened_cross)
        return np.clip(self._prior_diagonal - reduction, 0.0, self._prior_diagonal)

    @property
    def mean_flat(self) -> np.ndarray:
        """Posterior mean in flat (x-major) order, shape (size,)."""
        return self._flat_mean

    @property
    def variance_flat(self) -> np.ndarray:
        return self._flat_variance

    @property
    def mean_grid(self) -> np.ndarray:
        """Posterior mean at every grid point, shape (n_x, n_w)."""
        return self._flat_mean.reshape(self.grid.n_x, self.grid.n_w)

    @property
    def variance_grid(self) -> np.ndarray:
        """Posterior variance at every grid point, shape (n_x, n_w)."""
        return self._flat_variance.reshape(self.grid.n_x, self.grid.n_w)

    @property
    def std_grid(self) -> np.ndarray:
        return np.sqrt(self.variance_grid)

    def posterior_at(self, x_index: int, w_index: int) -> Tuple[float, float]:
        flat = self.grid.flat_index(x_index, w_index)
        return float(self._flat_mean[flat]), float(self._flat_variance[flat])

    def posterior_covariance(self, rows, cols=None) -> np.ndarray:
        """
        Posterior covariance block between flat grid indices.

        Args:
            rows: Flat indices of the first point set
            cols: Flat indices of the second point set (every grid point when omitted)

        Returns:
            Array of shape (len(rows), len(cols))
        """
        rows = np.atleast_1d(np.asarray(rows, dtype=int))
        cols = np.arange(self.grid.size) if cols is None else np.atleast_1d(np.asarray(cols, dtype=int))
        coords = self.grid.coordinates
        prior = kernel_matrix(self.kernel, coords[rows], coords[cols])
        return prior - self.whitened_cross[:, rows].T @ self.whitened_cross[:, cols]

    def covariance_with(self, x_index: int, w_index: int) -> np.ndarray:
        """Posterior covariance between every grid point and (x, w), shape (n_x, n_w)."""
        flat = self.grid.flat_index(x_index, w_index)
        cov = self.posterior_covariance([flat])[0]
        return cov.reshape(self.grid.n_x, self.grid.n_w)

    def slice_covariance(self, x_index: int) -> np.ndarray:
        """Posterior covariance matrix over the Omega slice at design x, shape (n_w, n_w)."""
        flat = self.slice_indices(x_index)
        cov = self.posterior_covariance(flat, flat)
        return 0.5 * (cov + cov.T)

    def slice_indices(self, x_index: int) -> np.ndarray:
        """Flat indices of the Omega slice at design x."""
        start = int(x_index) * self.grid.n_w
        return np.arange(start, start + self.grid.n_w)

    def one_step_update(self, x_index: int, w_index: int) -> OneStepUpdate:
        """Affine description of the posterior after a hypothetical observation at (x, w)."""
        cov = self.covariance_with(x_index, w_index)
        _, variance = self.posterior_at(x_index, w_index)
        predictive_var = variance + self.kernel.noise_variance
        predictive_std = float(np.sqrt(predictive_var))
        new_variance = np.clip(self.variance_grid - cov ** 2 / predictive_var, 0.0, None)
        return OneStepUpdate(
            mean=self.mean_grid,
            slope=cov / predictive_std,
            std=np.sqrt(new_variance),
            predictive_std=predictive_std,
        )


def _check_indices(grid: GridSpace, x_idx: np.ndarray, w_idx: np.ndarray) -> None:
    if np.any((x_idx < 0) | (x_idx >= grid.n_x)) or np.any((w_idx < 0) | (w_idx >= grid.n_w)):
        raise ConfigurationError("observation outside the grid", "observations")


def posterior_at(gp: GpPosterior, x_index: int, w_index: int) -> Tuple[float, float]:
    """Posterior (mean, variance) at a grid point."""
    return gp.posterior_at(x_index, w_index)


def add_observation(gp: GpPosterior, x_index: int, w_index: int, y: float) -> GpPosterior:
    return gp.add_observation(x_index, w_index, y)


def prior_variance_min(kernel: KernelParams, grid: GridSpace) -> float:
    """Smallest prior variance k(q, q) over the grid."""
    coords = grid.coordinates
    return float(min(kernel_eval(kernel, q, q) for q in coords))


def sample_prior(kernel: KernelParams, grid: GridSpace, rng: np.random.Generator) -> np.ndarray:
    """Joint draw of the latent function from the GP prior, shape (n_x, n_w)."""
    cov = kernel_matrix(kernel, grid.coordinates, grid.coordinates)
    draw = rng.multivariate_normal(np.zeros(grid.size), cov, method="eigh")
    return draw.reshape(grid.n_x, grid.n_w)
