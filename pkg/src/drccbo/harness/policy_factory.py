"""Map method tags to selection policies."""

from typing import Dict, Optional, Type

from drccbo.baselines import CcboPolicy, DrboPolicy, DrptrPolicy, RandomPolicy, UncertaintySamplingPolicy
from drccbo.core.constants import Methods
from drccbo.core.exceptions import ConfigurationError
from drccbo.drcc import ProposedPolicy, SelectionPolicy

POLICIES: Dict[str, Type[SelectionPolicy]] = {
    Methods.PROPOSED: ProposedPolicy,
    Methods.RANDOM: RandomPolicy,
    Methods.US: UncertaintySamplingPolicy,
    Methods.DRBO: DrboPolicy,
    Methods.DRPTR: DrptrPolicy,
    Methods.CCBO: CcboPolicy,
}


def create_policy(method: str, settings: Optional[object] = None) -> SelectionPolicy:
    """
    Instantiate the policy of a method tag.

    Args:
        method: One of Methods.ALL
        settings: BaselineSettings passed to the policy

    Returns:
        Fresh policy instance
    """
    try:
        policy_cls = POLICIES[method]
    except KeyError:
        raise ConfigurationError(f"unknown method '{method}'", "method") from None
    return policy_cls(settings)
