"""Benchmark problems, their true optimum and the utility gap."""

from drccbo.problems.benchmarks import make_grid, synthetic_f, synthetic_g, true_mixture_distribution
from drccbo.problems.instance import ProblemInstance, default_grid, problem_instance
from drccbo.problems.optimum import (
    TrueValues, accuracy_check, cc_accuracy_check, cc_optimum, exact_optimum, true_values, utility_gap,
)
from drccbo.problems.sir import RiskTables, infected_table, risk_functions, sir_simulate, sir_trajectory

__all__ = [
    'make_grid', 'synthetic_f', 'synthetic_g', 'true_mixture_distribution',
    'ProblemInstance', 'default_grid', 'problem_instance',
    'TrueValues', 'true_values', 'exact_optimum', 'utility_gap', 'accuracy_check',
    'cc_optimum', 'cc_accuracy_check',
    'RiskTables', 'infected_table', 'risk_functions', 'sir_simulate', 'sir_trajectory',
]
