"""Credible-interval bounds, acquisition, stopping rules and the proposed policy."""

from drccbo.drcc.acquisition import (
    acquisition, acquisition_values, current_best, select_w_simulator, select_x,
)
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy
from drccbo.drcc.bounds import (
    classify, classify_all, compute_bounds_table, credible_envelopes, credible_interval, f_bounds,
    g_bounds, indicator_envelopes, indicator_interval,
)
from drccbo.drcc.proposed import ProposedPolicy
from drccbo.drcc.schedules import ScheduleParams, beta_schedule, eta_parameter
from drccbo.drcc.stopping import stopping

__all__ = [
    'credible_interval', 'credible_envelopes', 'indicator_interval', 'indicator_envelopes',
    'f_bounds', 'g_bounds', 'classify', 'classify_all', 'compute_bounds_table',
    'current_best', 'acquisition', 'acquisition_values', 'select_x', 'select_w_simulator',
    'stopping', 'beta_schedule', 'eta_parameter', 'ScheduleParams',
    'PolicyContext', 'SelectionPolicy', 'ProposedPolicy',
]
