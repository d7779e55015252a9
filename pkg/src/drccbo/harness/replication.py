"""Replicated runs on a thread pool and their aggregation into utility-gap curves.

Replications share only the read-only problem tables; each one owns its GP state.
"""

from collections import Counter
from concurrent.futures import FIRST_EXCEPTION, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from drccbo.cache import TableCache
from drccbo.core.constants import Problems, StopStatuses
from drccbo.core.exceptions import InternalInconsistencyError, ReplicationError
from drccbo.core.models import RunTrace
from drccbo.harness.runner import run_single
from drccbo.problems import ProblemInstance, problem_instance
from drccbo.utils.logger import get_logger

logger = get_logger(__name__)


def padded_gaps(trace: RunTrace, length: int) -> np.ndarray:
    """Utility gaps of a run, held at their final value up to `length` iterations."""
    gaps = trace.utility_gaps[:length]
    if gaps.size == 0:
        raise InternalInconsistencyError(f"cannot pad the empty trace of seed {trace.seed}")
    if gaps.size < length:
        gaps = np.concatenate([gaps, np.full(length - gaps.size, gaps[-1])])
    return gaps


def mean_curve(traces: Sequence[RunTrace], length: int) -> np.ndarray:
    """Per-iteration mean utility gap over replications (early stops padded)."""
    return np.mean([padded_gaps(trace, length) for trace in traces], axis=0)


def status_counts(traces: Sequence[RunTrace]) -> Dict[str, int]:
    counts = Counter(trace.final_status.value for trace in traces)
    return {status: counts.get(status, 0)
            for status in (StopStatuses.CONTINUE, StopStatuses.NO_SOLUTION, StopStatuses.CONVERGED)}


@dataclass
class ReplicationResult:
    """Traces of one method ordered by replication index, plus their aggregate."""
    method: str
    setting: str
    problem: str
    seeds: List[int]
    traces: List[RunTrace]
    curve: np.ndarray
    n_designs: int
    status_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def n_reps(self) -> int:
        return len(self.traces)

    @property
    def final_mean_gap(self) -> float:
        return float(self.curve[-1])


def _shared_instance(config, cache: Optional[TableCache]) -> Optional[ProblemInstance]:
    # a gp-prior problem without its own seed is redrawn by every replication
    if config.problem == Problems.GP_PRIOR and config.problem_seed is None:
        return None
    return problem_instance(config, config.seed, cache)


def run_replications(config, max_workers: int = 1, cache: Optional[TableCache] = None,
                     progress: bool = True) -> ReplicationResult:
    """
    Run config.replications seeded runs and aggregate their utility gaps.

    Args:
        config: ExperimentConfig
        max_workers: Thread pool size
        cache: SIR table cache
        progress: Show a tqdm progress bar

    Returns:
        ReplicationResult

    Raises:
        ReplicationError: For the first replication that fails; pending ones are cancelled
    """
    seeds = [config.seed + rep for rep in range(config.replications)]
    instance = _shared_instance(config, cache)
    traces: List[Optional[RunTrace]] = [None] * len(seeds)

    logger.info(f"Running {len(seeds)} replications of {config.method} "
                f"({config.problem}, {config.setting}) with {max_workers} worker(s)")

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_rep = {
            executor.submit(run_single, config, seed, None, cache, instance): rep
            for rep, seed in enumerate(seeds)
        }
        progress_bar = tqdm(total=len(seeds), desc=f"{config.method}", unit="rep", disable=not progress)
        pending = set(future_to_rep)
        try:
            while pending:
                done, pending = wait(pending, return_when=FIRST_EXCEPTION)
                for future in sorted(done, key=future_to_rep.get):
                    rep = future_to_rep[future]
                    error = future.exception()
                    if error is not None:
                        logger.error(f"Replication {rep} (seed {seeds[rep]}) failed: {error}")
                        for other in pending:
                            other.cancel()
                        raise ReplicationError(rep, seeds[rep], error) from error
                    traces[rep] = future.result()
                    progress_bar.update(1)
        finally:
            progress_bar.close()

    completed = [trace for trace in traces if trace is not None]
    result = ReplicationResult(
        method=config.method,
        setting=config.setting,
        problem=config.problem,
        seeds=seeds,
        traces=completed,
        curve=mean_curve(completed, config.iterations),
        n_designs=instance.grid.n_x if instance is not None else config.grid.n_x,
        status_counts=status_counts(completed),
    )
    early = sum(1 for trace in completed if len(trace) < config.iterations)
    if early:
        logger.warning(f"{early} replication(s) stopped early; their final utility gap is carried forward")
    logger.info(f"Replications complete: final mean UG {result.final_mean_gap:.6g}, "
                f"status counts {result.status_counts}")
    return result
