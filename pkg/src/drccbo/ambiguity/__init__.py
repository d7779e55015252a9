"""Ambiguity sets and worst-case expectations."""

from drccbo.ambiguity.worst_case import (
    empirical_reference, epsilon_schedule, l1_distance, worst_case_expectation,
    worst_case_expectation_batch,
)

__all__ = ['l1_distance', 'worst_case_expectation', 'worst_case_expectation_batch',
           'empirical_reference', 'epsilon_schedule']
