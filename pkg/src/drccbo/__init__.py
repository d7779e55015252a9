"""Distributionally robust chance-constrained Bayesian optimization.

Credible-interval bounds on worst-case expectations over L1 ambiguity sets,
the acquisition and stopping rules built on them, comparison policies, the
benchmark problems and a replicated-experiment harness.
"""

__version__ = "1.0.0"
__author__ = "drcc-bo developers"

# Re-export commonly used classes and functions for convenience
from drccbo.core.constants import Methods, Problems, Settings
from drccbo.core.exceptions import (
    ConfigurationError, DrccBoError, NumericalError, ReplicationError, SelectionError, ValidationError,
)
from drccbo.config.settings import ExperimentConfig

__all__ = [
    # Version
    '__version__',
    # Config
    'ExperimentConfig',
    # Constants
    'Methods', 'Problems', 'Settings',
    # Exceptions
    'DrccBoError', 'ConfigurationError', 'NumericalError', 'ReplicationError', 'SelectionError',
    'ValidationError',
]
