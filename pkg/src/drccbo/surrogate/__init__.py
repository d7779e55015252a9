"""Gaussian-process surrogates."""

from drccbo.surrogate.gp import (
    GpPosterior, OneStepUpdate, kernel_eval, kernel_matrix, posterior_at, add_observation,
    prior_variance_min, sample_prior,
)

__all__ = ['GpPosterior', 'OneStepUpdate', 'kernel_eval', 'kernel_matrix', 'posterior_at',
           'add_observation', 'prior_variance_min', 'sample_prior']
