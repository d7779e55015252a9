"""Reference implementations the library is checked against.

Both are deliberately naive: a general-purpose LP for the worst-case
expectation and a dense linear solve for the GP posterior.
"""

from typing import Iterable, Tuple

import numpy as np
from scipy.optimize import linprog

from drccbo.core.models import GridSpace, KernelParams
from drccbo.surrogate import kernel_matrix


def lp_worst_case(costs: np.ndarray, reference: np.ndarray, radius: float) -> float:
    """
    min c^T p  s.t.  sum p = 1, p >= 0, |p - p*|_1 <= radius, via the epigraph form.

    Variables are (p, s) with -s <= p - p* <= s and sum s <= radius.
    """
    costs = np.asarray(costs, dtype=float)
    reference = np.asarray(reference, dtype=float)
    n = costs.size
    identity = np.eye(n)
    objective = np.concatenate([costs, np.zeros(n)])
    a_ub = np.vstack([
        np.hstack([identity, -identity]),
        np.hstack([-identity, -identity]),
        np.concatenate([np.zeros(n), np.ones(n)])[None, :],
    ])
    b_ub = np.concatenate([reference, -reference, [radius]])
    a_eq = np.concatenate([np.ones(n), np.zeros(n)])[None, :]
    result = linprog(objective, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=[1.0],
                     bounds=[(0, None)] * (2 * n), method="highs",
                     options={"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10})
    assert result.status == 0, result.message
    return float(result.fun)


def dense_posterior(kernel: KernelParams, grid: GridSpace,
                    observations: Iterable[Tuple[int, int, float]]) -> Tuple[np.ndarray, np.ndarray]:
    """Posterior mean and variance over the flat grid from one dense solve."""
    observations = list(observations)
    coords = grid.coordinates
    prior_var = np.full(grid.size, kernel.signal_variance)
    if not observations:
        return np.zeros(grid.size), prior_var
    flat = np.array([grid.flat_index(x, w) for x, w, _ in observations])
    y = np.array([value for _, _, value in observations])
    gram = kernel_matrix(kernel, coords[flat], coords[flat]) + kernel.noise_variance * np.eye(flat.size)
    cross = kernel_matrix(kernel, coords[flat], coords)
    solved = np.linalg.solve(gram, cross)
    mean = solved.T @ y
    variance = prior_var - np.sum(cross * solved, axis=0)
    return mean, variance
