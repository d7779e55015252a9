"""Human-readable end-of-run summary."""

from typing import Sequence


def print_summary(results: Sequence):
    """Print final mean utility gap and stop-status counts of every method."""
    if not results:
        print("No results.")
        return
    first = results[0]
    print("\n" + "=" * 60)
    print(f"DRCC-BO SUMMARY: {first.problem} / {first.setting}")
    print("=" * 60)
    for result in results:
        counts = ", ".join(f"{status}={count}" for status, count in result.status_counts.items())
        print(f"{result.method:<10} reps={result.n_reps:<4} iterations={len(result.curve):<5} "
              f"final mean UG={result.final_mean_gap:.6g}")
        print(f"{'':<10} status: {counts}")
    print("=" * 60)
