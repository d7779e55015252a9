"""Distributionally robust BO on the objective alone (ignores the constraint)."""

from drccbo.core.constants import Methods
from drccbo.core.exceptions import DimensionMismatchError
from drccbo.core.models import BoundsTable, GridSpace, Selection
from drccbo.drcc.base_policy import PolicyContext, SelectionPolicy
from drccbo.surrogate import GpPosterior
from drccbo.utils.numeric import first_argmax


def drbo_select(gp_f: GpPosterior, table: BoundsTable, grid: GridSpace,
                uncontrollable: bool = False) -> Selection:
    """x maximizes the upper F bound; w maximizes the f variance at that x."""
    x_next = first_argmax(table.upper_f)
    if uncontrollable:
        return Selection(x_next)
    if table.n_designs != grid.n_x:
        raise DimensionMismatchError(grid.n_x, table.n_designs, "bounds table")
    return Selection(x_next, first_argmax(gp_f.variance_grid[x_next]))


class DrboPolicy(SelectionPolicy):
    name = Methods.DRBO

    def select(self, ctx: PolicyContext) -> Selection:
        return drbo_select(ctx.gp_f, ctx.table, ctx.grid, ctx.uncontrollable)
