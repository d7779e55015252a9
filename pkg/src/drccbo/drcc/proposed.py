"""The proposed credible-interval policy."""

from drccbo.core.constants import Methods
from drccbo.core.models import Selection
from drccbo.drcc.acquisition import acquisition_values, current_best, select_w_simulator, select_x
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy


class ProposedPolicy(SelectionPolicy):
    """x maximizes the improvement-times-feasibility acquisition; w the summed variance."""

    name = Methods.PROPOSED

    def select(self, ctx: PolicyContext) -> Selection:
        cbest = current_best(ctx.table)
        values = acquisition_values(ctx.table, cbest, ctx.alpha, ctx.xi)
        x_next = select_x(ctx.table, values)
        if ctx.uncontrollable:
            return Selection(x_next)
        return Selection(x_next, select_w_simulator(x_next, ctx.gp_f, ctx.gp_g))
