"""Shared fixtures."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path if package is not installed
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from drccbo.config import ExperimentConfig  # noqa: E402
from drccbo.core.models import AmbiguitySet, DiscreteDistribution, GridSpace, KernelParams  # noqa: E402

SMALL_GRID = {"x_lo": -10.0, "x_hi": 10.0, "n_x": 12, "w_lo": -10.0, "w_hi": 10.0, "n_w": 8}


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def small_grid():
    return GridSpace(np.linspace(-2.0, 2.0, 6), np.linspace(-1.0, 1.0, 4))


@pytest.fixture
def kernel():
    return KernelParams(signal_variance=1.0, length_scale=2.0, noise_variance=1e-4)


@pytest.fixture
def uniform_set(small_grid):
    return AmbiguitySet(DiscreteDistribution.uniform(small_grid.n_w), 0.15)


@pytest.fixture
def synthetic_config():
    """Synthetic problem on a coarse grid with a short budget."""
    return ExperimentConfig.from_preset("synthetic", "simulator", iterations=6, grid=SMALL_GRID)


def make_config(**overrides) -> ExperimentConfig:
    fields = {"iterations": 6, "grid": SMALL_GRID}
    fields.update(overrides)
    problem = fields.pop("problem", "synthetic")
    setting = fields.pop("setting", "simulator")
    return ExperimentConfig.from_preset(problem, setting, **fields)
