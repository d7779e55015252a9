"""Stopping rules: every design provably infeasible, or F bounds converged."""

from drccbo.core.models import BoundsTable, StopKind, StopStatus


def stopping(table: BoundsTable, xi: float) -> StopStatus:
    """
    Evaluate both stopping conditions on one iteration's bounds.

    Args:
        table: Bounds and labels of the current iteration
        xi: Accuracy parameter

    Returns:
        NO_SOLUTION when L = X; CONVERGED (with the recommendation) when H is
        nonempty and max over H u M of uF minus max over H of lF is below xi;
        CONTINUE otherwise
    """
    high = table.high
    if table.low.size == table.n_designs:
        return StopStatus(StopKind.NO_SOLUTION)
    if high.size == 0:
        return StopStatus(StopKind.CONTINUE)

    optimistic = float(table.upper_f[table.candidates].max())
    conservative = float(table.lower_f[high].max())
    if optimistic - conservative < xi:
        return StopStatus(StopKind.CONVERGED, table.recommendation())
    return StopStatus(StopKind.CONTINUE)
