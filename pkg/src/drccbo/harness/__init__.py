"""Experiment harness: the optimization loop and replicated runs."""

from drccbo.harness.policy_factory import POLICIES, create_policy
from drccbo.harness.replication import (
    ReplicationResult, mean_curve, padded_gaps, run_replications, status_counts,
)
from drccbo.harness.runner import RandomStreams, ambiguity_at, run_single

__all__ = [
    'POLICIES', 'create_policy',
    'RandomStreams', 'ambiguity_at', 'run_single',
    'ReplicationResult', 'mean_curve', 'padded_gaps', 'run_replications', 'status_counts',
]
