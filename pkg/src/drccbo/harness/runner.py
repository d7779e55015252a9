"""The sequential loop of one DRCC-BO run: bounds, stopping, selection, observation, update."""

from typing import Callable, List, Optional

import numpy as np

from drccbo.ambiguity import empirical_reference, epsilon_schedule
from drccbo.cache import TableCache
from drccbo.core.constants import EpsilonModes, Settings
from drccbo.core.exceptions import NumericalError
from drccbo.core.models import (
    AmbiguitySet, BoundsTable, DiscreteDistribution, RunTrace, StopKind, TraceRecord,
)
from drccbo.drcc import PolicyContext, ScheduleParams, compute_bounds_table, current_best, stopping
from drccbo.harness.policy_factory import create_policy
from drccbo.problems import ProblemInstance, problem_instance, utility_gap
from drccbo.surrogate import GpPosterior, prior_variance_min
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)

IterationCallback = Callable[[int, BoundsTable], None]


class RandomStreams:
    """Independent generators derived from one seed.

    The environment stream is consumed once per iteration in the uncontrollable
    settings, whatever the policy does with its own stream.
    """

    def __init__(self, seed: int):
        init, noise, environment, policy = np.random.SeedSequence(seed).spawn(4)
        self.init = np.random.default_rng(init)
        self.noise = np.random.default_rng(noise)
        self.environment = np.random.default_rng(environment)
        self.policy = np.random.default_rng(policy)


def ambiguity_at(config, t: int, n_w: int, observed_w: List[int]) -> AmbiguitySet:
    """Ambiguity set of iteration t (empirical reference in the data-driven setting)."""
    if config.setting == Settings.DATA_DRIVEN:
        reference = empirical_reference(observed_w, n_w)
    else:
        reference = DiscreteDistribution.uniform(n_w)
    if config.epsilon.mode == EpsilonModes.SCHEDULE:
        radius = epsilon_schedule(t, n_w, config.delta)
    else:
        radius = config.epsilon.value
    return AmbiguitySet(reference, radius)


def _draw_environment(instance: ProblemInstance, rng: np.random.Generator) -> int:
    return int(rng.choice(instance.grid.n_w, p=instance.true_distribution.weights))


def run_single(config, seed: int, on_iteration: Optional[IterationCallback] = None,
               cache: Optional[TableCache] = None,
               instance: Optional[ProblemInstance] = None) -> RunTrace:
    """
    Run one seeded replication until a stopping rule fires or the budget is spent.

    Args:
        config: ExperimentConfig
        seed: Replication seed
        on_iteration: Called with (t, bounds table) before the stopping check
        cache: SIR table cache used when the instance has to be built
        instance: Prebuilt problem instance (built from config and seed when omitted)

    Returns:
        RunTrace with one record per iteration

    Raises:
        NumericalError: With the iteration and seed added to its context
    """
    run_logger = logger.with_context(method=config.method, setting=config.setting,
                                     problem=config.problem, seed=seed)
    if instance is None:
        instance = problem_instance(config, seed, cache)
    grid = instance.grid
    streams = RandomStreams(seed)
    policy = create_policy(config.method, config.baseline)
    uncontrollable = config.uncontrollable

    kernel_f = config.kernel_f.to_params()
    kernel_g = config.kernel_g.to_params()
    schedule = ScheduleParams.from_config(config, float(np.sqrt(prior_variance_min(kernel_g, grid))), grid.size)

    x0 = int(streams.init.integers(grid.n_x))
    if uncontrollable:
        w0 = _draw_environment(instance, streams.environment)
    else:
        w0 = int(streams.init.integers(grid.n_w))
    y_f, y_g = instance.observe(x0, w0, streams.noise)
    gp_f = GpPosterior.prior(kernel_f, grid).add_observation(x0, w0, y_f)
    gp_g = GpPosterior.prior(kernel_g, grid).add_observation(x0, w0, y_g)
    observed_w = [w0]

    trace = RunTrace(config.method, config.setting, config.problem, seed)
    run_logger.info(f"Starting run: budget {config.iterations}, grid {grid.n_x}x{grid.n_w}, "
                    f"initial point ({x0}, {w0})")

    t = 0
    try:
        for t in range(1, config.iterations + 1):
            ambiguity = ambiguity_at(config, t, grid.n_w, observed_w)
            beta_f, beta_g = schedule.betas(t, grid.size)
            table = compute_bounds_table(gp_f, gp_g, beta_f, beta_g, schedule.threshold_h, schedule.eta,
                                         schedule.alpha, schedule.xi, ambiguity)
            if on_iteration is not None:
                on_iteration(t, table)

            status = stopping(table, schedule.xi)
            recommendation = status.recommendation if status.kind is StopKind.CONVERGED else table.recommendation()
            gap = utility_gap(recommendation, instance, ambiguity, schedule.alpha, schedule.threshold_h)
            n_high, n_low, n_maybe = table.counts()
            c_best = current_best(table)

            if status.terminal:
                trace.records.append(TraceRecord(t, None, None, None, None, n_high, n_low, n_maybe,
                                                 c_best, recommendation, gap, status.kind))
                run_logger.with_context(t=t).info(f"Stopped: {status.kind.value}")
                break

            ctx = PolicyContext(t=t, grid=grid, gp_f=gp_f, gp_g=gp_g, table=table, ambiguity=ambiguity,
                                beta_f=beta_f, beta_g=beta_g, alpha=schedule.alpha, xi=schedule.xi,
                                eta=schedule.eta, threshold_h=schedule.threshold_h,
                                uncontrollable=uncontrollable, rng=streams.policy,
                                observed_w=tuple(observed_w))
            selection = policy.select(ctx)
            x_next = selection.x_index
            if uncontrollable:
                w_next = _draw_environment(instance, streams.environment)
            else:
                w_next = selection.w_index

            y_f, y_g = instance.observe(x_next, w_next, streams.noise)
            trace.records.append(TraceRecord(t, x_next, w_next, y_f, y_g, n_high, n_low, n_maybe,
                                             c_best, recommendation, gap, StopKind.CONTINUE))
            run_logger.with_context(t=t).debug(
                f"Evaluated x={x_next} w={w_next} |H|={n_high} |L|={n_low} |M|={n_maybe} UG={gap:.6g}")

            gp_f = gp_f.add_observation(x_next, w_next, y_f)
            gp_g = gp_g.add_observation(x_next, w_next, y_g)
            observed_w.append(w_next)
    except NumericalError as e:
        raise e.with_context(t=t, seed=seed) from e

    final = trace.records[-1] if trace.records else None
    run_logger.info(f"Finished run after {len(trace)} iterations"
                    + (f", final UG {final.utility_gap:.6g}" if final else ""))
    return trace
