"""Problem instances: true objective/constraint tables on a grid plus nature's law over Omega."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from drccbo.cache import TableCache
from drccbo.core.constants import Problems, SirDefaults, SyntheticDefaults
from drccbo.core.exceptions import ConfigurationError, DimensionMismatchError
from drccbo.core.models import DiscreteDistribution, GridSpace
from drccbo.problems.benchmarks import make_grid, synthetic_f, synthetic_g, true_mixture_distribution
from drccbo.problems.sir import risk_functions
from drccbo.surrogate import sample_prior
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """True black-box tables indexed [x_index, w_index] and the environment law p-dagger."""
    name: str
    grid: GridSpace
    f_table: np.ndarray
    g_table: np.ndarray
    noise_variance_f: float
    noise_variance_g: float
    true_distribution: DiscreteDistribution

    def __post_init__(self):
        shape = (self.grid.n_x, self.grid.n_w)
        for name in ("f_table", "g_table"):
            table = np.array(getattr(self, name), dtype=float)
            if table.shape != shape:
                raise DimensionMismatchError(self.grid.size, table.size, name)
            if not np.all(np.isfinite(table)):
                raise ConfigurationError("table values must be finite", name)
            table.setflags(write=False)
            object.__setattr__(self, name, table)
        if self.true_distribution.size != self.grid.n_w:
            raise DimensionMismatchError(self.grid.n_w, self.true_distribution.size, "true_distribution")

    def observe(self, x_index: int, w_index: int, rng: np.random.Generator):
        """Noisy evaluations (y_f, y_g); f is drawn before g."""
        y_f = self.f_table[x_index, w_index] + np.sqrt(self.noise_variance_f) * rng.standard_normal()
        y_g = self.g_table[x_index, w_index] + np.sqrt(self.noise_variance_g) * rng.standard_normal()
        return float(y_f), float(y_g)


def default_grid(problem: str) -> GridSpace:
    """Grid of a problem when the config does not override it."""
    if problem == Problems.SYNTHETIC:
        values = make_grid(SyntheticDefaults.GRID_LO, SyntheticDefaults.GRID_HI, SyntheticDefaults.GRID_N)
    elif problem in Problems.SIR_CASES:
        values = make_grid(SirDefaults.GRID_LO, SirDefaults.GRID_HI, SirDefaults.GRID_N)
    else:
        raise ConfigurationError(f"problem '{problem}' has no default grid", "grid")
    return GridSpace(values, values)


def _sir_tables(problem: str, grid: GridSpace, cache: Optional[TableCache]):
    # Cases 1/2 put the contact rate on x, cases 3/4 the isolation rate
    transposed = problem in (Problems.SIR_CASE3, Problems.SIR_CASE4)
    if transposed:
        beta_values, gamma_values = grid.w_values, grid.x_values
    else:
        beta_values, gamma_values = grid.x_values, grid.w_values
    risks = risk_functions(beta_values, gamma_values, cache=cache)
    if problem in (Problems.SIR_CASE1, Problems.SIR_CASE3):
        f_table, g_table = -risks.r1, -risks.r2
    else:
        f_table, g_table = -risks.r2, -risks.r1
    if transposed:
        f_table, g_table = f_table.T, g_table.T
    return f_table, g_table


def problem_instance(config, seed: int = 0, cache: Optional[TableCache] = None) -> ProblemInstance:
    """
    Build the true problem of an experiment.

    Args:
        config: ExperimentConfig
        seed: Run seed (used by gp-prior when no problem_seed is configured)
        cache: Optional persistent cache for the SIR table

    Returns:
        ProblemInstance
    """
    problem = config.problem
    noise_f = config.kernel_f.noise_variance
    noise_g = config.kernel_g.noise_variance

    if problem == Problems.GP_PRIOR:
        if config.grid is None:
            raise ConfigurationError("gp-prior needs an explicit grid", "grid")
        grid = config.grid.to_grid()
        draw_seed = config.problem_seed if config.problem_seed is not None else seed
        rng = np.random.default_rng(draw_seed)
        f_table = sample_prior(config.kernel_f.to_params(), grid, rng)
        g_table = sample_prior(config.kernel_g.to_params(), grid, rng)
        logger.debug(f"Drew gp-prior instance with seed {draw_seed}")
        return ProblemInstance(problem, grid, f_table, g_table, noise_f, noise_g,
                               DiscreteDistribution.uniform(grid.n_w))

    grid = config.grid.to_grid() if config.grid is not None else default_grid(problem)
    if problem == Problems.SYNTHETIC:
        xx, ww = np.meshgrid(grid.x_values, grid.w_values, indexing="ij")
        return ProblemInstance(problem, grid, synthetic_f(xx, ww), synthetic_g(xx, ww), noise_f, noise_g,
                               true_mixture_distribution(grid.w_values))

    if problem in Problems.SIR_CASES:
        f_table, g_table = _sir_tables(problem, grid, cache)
        return ProblemInstance(problem, grid, f_table, g_table, noise_f, noise_g,
                               DiscreteDistribution.uniform(grid.n_w))

    raise ConfigurationError(f"unknown problem '{problem}'", "problem")
