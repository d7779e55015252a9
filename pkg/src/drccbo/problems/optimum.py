"""Brute-force optimum of the true problem and the utility-gap metric."""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from drccbo.ambiguity import worst_case_expectation_batch
from drccbo.core.models import AmbiguitySet
from drccbo.problems.instance import ProblemInstance
from drccbo.utils.numeric import first_argmax


@dataclass(frozen=True, eq=False)
class TrueValues:
    """Worst-case expectation F(x) and worst-case probability G(x) on the true tables."""
    F: np.ndarray
    G: np.ndarray

    def optimum(self, alpha: float) -> Tuple[Optional[int], float]:
        feasible = self.G > alpha
        if not feasible.any():
            return None, float(self.F.min())
        x_star = first_argmax(self.F, feasible)
        return x_star, float(self.F[x_star])


def true_values(instance: ProblemInstance, ambiguity: AmbiguitySet, h: float) -> TrueValues:
    """F and G for every design under the given ambiguity set."""
    indicator = (instance.g_table > h).astype(float)
    return TrueValues(
        F=worst_case_expectation_batch(instance.f_table, ambiguity),
        G=worst_case_expectation_batch(indicator, ambiguity),
    )


def exact_optimum(instance: ProblemInstance, ambiguity: AmbiguitySet, alpha: float,
                  h: float) -> Tuple[Optional[int], float]:
    """
    argmax F(x) subject to G(x) > alpha by enumeration of X.

    Args:
        instance: True problem
        ambiguity: Current ambiguity set
        alpha: Probability level
        h: Constraint threshold

    Returns:
        (x*, F(x*)), or (None, min F) when no design is feasible
    """
    return true_values(instance, ambiguity, h).optimum(alpha)


def _gap(values: TrueValues, recommendation: Optional[int], alpha: float) -> float:
    _, best = values.optimum(alpha)
    if recommendation is not None and values.G[recommendation] > alpha:
        return best - float(values.F[recommendation])
    return best - float(values.F.min())


def utility_gap(recommendation: Optional[int], instance: ProblemInstance, ambiguity: AmbiguitySet,
                alpha: float, h: float) -> float:
    """
    Regret of a recommendation, with the worst-case penalty when it is missing or infeasible.

    Args:
        recommendation: argmax of the lower F bound over H, or None when H is empty
        instance: True problem
        ambiguity: Ambiguity set of the current iteration
        alpha: Probability level
        h: Constraint threshold

    Returns:
        F(x*) - F(x_hat) if x_hat exists and G(x_hat) > alpha, else F(x*) - min F
    """
    return _gap(true_values(instance, ambiguity, h), recommendation, alpha)


def _accurate(values: TrueValues, x_hat: Optional[int], alpha: float, tolerance: float) -> bool:
    x_star, best = values.optimum(alpha)
    if x_hat is None:
        # declaring "no solution" is accurate only when the true problem has none
        return x_star is None
    return bool(best - values.F[x_hat] < tolerance and values.G[x_hat] > alpha - tolerance)


def accuracy_check(instance: ProblemInstance, ambiguity: AmbiguitySet, alpha: float, h: float,
                   x_hat: Optional[int], tolerance: float) -> bool:
    """C-accuracy: F(x*) - F(x_hat) < C and G(x_hat) > alpha - C on the true tables."""
    return _accurate(true_values(instance, ambiguity, h), x_hat, alpha, tolerance)


def _nominal(instance: ProblemInstance) -> AmbiguitySet:
    return AmbiguitySet(instance.true_distribution, 0.0)


def cc_optimum(instance: ProblemInstance, alpha: float, h: float) -> Tuple[Optional[int], float]:
    """Optimum of the chance-constrained problem under the true environment law."""
    return exact_optimum(instance, _nominal(instance), alpha, h)


def cc_accuracy_check(instance: ProblemInstance, alpha: float, h: float, x_hat: Optional[int],
                      tolerance: float) -> bool:
    return accuracy_check(instance, _nominal(instance), alpha, h, x_hat, tolerance)
