"""Comparison selection policies."""

from drccbo.baselines.ccbo_policy import CcboPolicy, ccbo_select
from drccbo.baselines.drbo_policy import DrboPolicy, drbo_select
from drccbo.baselines.drptr_policy import DrptrPolicy, drptr_select
from drccbo.baselines.random_policy import RandomPolicy, random_select
from drccbo.baselines.us_policy import UncertaintySamplingPolicy, us_select

__all__ = [
    'RandomPolicy', 'UncertaintySamplingPolicy', 'DrboPolicy', 'DrptrPolicy', 'CcboPolicy',
    'random_select', 'us_select', 'drbo_select', 'drptr_select', 'ccbo_select',
]
