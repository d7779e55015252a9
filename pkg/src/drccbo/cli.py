"""Command-line interface: run experiments, check the oracle suites, precompute the SIR table."""

import argparse
import subprocess
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from drccbo import __version__
from drccbo.cache import FileTableCache
from drccbo.config import ExperimentConfig, RuntimeSettings
from drccbo.core.constants import ExitCodes, LogLevels, Methods, Problems, Settings, SirDefaults
from drccbo.core.exceptions import ConfigurationError, DrccBoError
from drccbo.exporters import emit_csv, emit_plot, print_summary
from drccbo.harness import run_replications
from drccbo.problems import infected_table, make_grid
from drccbo.problems.sir import sir_header
from drccbo.utils.logger import get_logger, setup_logging
from drccbo.validators import ValidationResult, validate_trace

logger = get_logger(__name__)


def _parse_methods(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    methods = [part.strip() for part in value.split(",") if part.strip()]
    unknown = [m for m in methods if m not in Methods.ALL]
    if unknown or not methods:
        raise ConfigurationError(f"unknown method(s) {unknown or value!r} "
                                 f"(expected a comma-separated subset of {', '.join(Methods.ALL)})", "method")
    return methods


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drccbo",
        description="Distributionally robust chance-constrained Bayesian optimization experiments",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    parser.add_argument("--log-level", type=str, choices=LogLevels.ALL,
                        help="Logging level (default: $DRCCBO_LOG_LEVEL or INFO)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", help="Run replicated experiments and write curves, traces and plot")
    source = run.add_mutually_exclusive_group()
    source.add_argument("--config", type=Path, help="JSON or YAML experiment config")
    source.add_argument("--preset", type=str, choices=Problems.ALL,
                        help="Build the config from the parameter row of a problem")
    run.add_argument("--out", type=Path, help="Output directory (overrides output_dir)")
    run.add_argument("--reps", type=int, help="Number of replications")
    run.add_argument("--seed", type=int, help="Base seed")
    run.add_argument("--method", type=str, help="Method or comma-separated methods")
    run.add_argument("--setting", type=str, choices=Settings.ALL, help="Experiment setting")
    run.add_argument("--iterations", type=int, help="Iteration budget")
    run.add_argument("--workers", type=int, help="Replication threads (default: $DRCCBO_MAX_WORKERS or 4)")
    run.add_argument("--no-progress", action="store_true", help="Hide the progress bar")

    subparsers.add_parser("oracle-check", help="Run the LP-oracle and GP-rebuild property suites")

    precompute = subparsers.add_parser("precompute-sir", help="Write the SIR peak-infected table cache")
    precompute.add_argument("--out", type=Path, required=True, help="Cache file path")
    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    """Config from --config or --preset, with the run flags applied on top."""
    if args.config is not None:
        config = ExperimentConfig.from_file(args.config)
    elif args.preset is not None:
        config = ExperimentConfig.from_preset(args.preset, args.setting or Settings.SIMULATOR)
    else:
        raise ConfigurationError("either --config or --preset is required", "config")
    return config.with_overrides(
        output_dir=args.out,
        replications=args.reps,
        seed=args.seed,
        setting=args.setting,
        iterations=args.iterations,
    )


def _check_traces(result, n_designs: int, budget: int) -> ValidationResult:
    overall = ValidationResult()
    for trace in result.traces:
        overall.merge(validate_trace(trace, n_designs, budget))
    return overall


def command_run(args: argparse.Namespace, runtime: RuntimeSettings) -> int:
    config = load_config(args)
    methods = _parse_methods(args.method) or [config.method]
    workers = args.workers if args.workers is not None else runtime.max_workers
    if workers < 1:
        raise ConfigurationError("--workers must be positive", "workers")
    cache = FileTableCache(runtime.sir_cache_path) if runtime.sir_cache_path else None

    results = []
    for method in methods:
        method_config = config.with_overrides(method=method)
        result = run_replications(method_config, max_workers=workers, cache=cache,
                                  progress=not args.no_progress)
        _check_traces(result, result.n_designs, method_config.iterations).raise_if_invalid()
        results.append(result)

    emit_csv(results, config.output_dir)
    emit_plot(results, config.output_dir)
    print_summary(results)
    return ExitCodes.OK


def command_oracle_check() -> int:
    tests_dir = Path(__file__).resolve().parents[2] / "tests"
    if not tests_dir.is_dir():
        logger.error(f"Test suite not found at {tests_dir}")
        return ExitCodes.RUNTIME_ERROR
    completed = subprocess.run([sys.executable, "-m", "pytest", "-m", "oracle", "-q", str(tests_dir)])
    return ExitCodes.OK if completed.returncode == 0 else ExitCodes.RUNTIME_ERROR


def command_precompute_sir(args: argparse.Namespace) -> int:
    values = make_grid(SirDefaults.GRID_LO, SirDefaults.GRID_HI, SirDefaults.GRID_N)
    cache = FileTableCache(args.out)
    table = cache.get_or_compute(sir_header(values, values), lambda: infected_table(values, values))
    print(f"SIR table ({table.shape[0]}x{table.shape[1]}) cached at {args.out}")
    return ExitCodes.OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        runtime = RuntimeSettings.from_env()
        problems = runtime.validate()
        if problems:
            raise ConfigurationError("; ".join(problems), "environment")
    except ConfigurationError as e:
        setup_logging(LogLevels.INFO)
        logger.error(str(e))
        return ExitCodes.CONFIG_ERROR

    if args.log_level:
        level = args.log_level
    else:
        level = LogLevels.DEBUG if args.verbose else runtime.log_level
    setup_logging(level)

    try:
        if args.command == "run":
            return command_run(args, runtime)
        if args.command == "oracle-check":
            return command_oracle_check()
        if args.command == "precompute-sir":
            return command_precompute_sir(args)
        parser.error(f"unknown command {args.command}")
    except ConfigurationError as e:
        logger.error(str(e))
        return ExitCodes.CONFIG_ERROR
    except DrccBoError as e:
        logger.error(str(e))
        return ExitCodes.RUNTIME_ERROR
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return ExitCodes.RUNTIME_ERROR
    return ExitCodes.OK


if __name__ == "__main__":
    sys.exit(main())
