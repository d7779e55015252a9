"""Export utility-gap curves and run traces to CSV."""

import csv
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np

from drccbo.core.constants import OutputFiles
from drccbo.core.exceptions import ExportError
from drccbo.core.models import RunTrace, TraceRecord
from drccbo.core.types import CurveRow, TraceRow
from drccbo.utils.logger import get_logger
from drccbo.utils.numeric import format_float

logger = get_logger(__name__)


def _optional_int(value: Optional[int]) -> str:
    return "" if value is None else str(int(value))


def curve_rows(result) -> List[CurveRow]:
    """summary.csv rows of one ReplicationResult (iterations numbered from 1)."""
    return [
        CurveRow(method=result.method, setting=result.setting, problem=result.problem,
                 iteration=t, mean_utility_gap=float(gap), n_reps=result.n_reps)
        for t, gap in enumerate(result.curve, start=1)
    ]


def trace_row(record: TraceRecord) -> TraceRow:
    return TraceRow(
        t=record.t, x_index=record.x_index, w_index=record.w_index, y_f=record.y_f, y_g=record.y_g,
        n_H=record.n_high, n_L=record.n_low, n_M=record.n_maybe, c_best=record.c_best,
        recommend_index=record.recommendation, utility_gap=record.utility_gap, status=record.status.value,
    )


def _format_trace_row(row: TraceRow) -> Dict[str, str]:
    return {
        "t": str(row["t"]),
        "x_index": _optional_int(row["x_index"]),
        "w_index": _optional_int(row["w_index"]),
        "y_f": format_float(row["y_f"]),
        "y_g": format_float(row["y_g"]),
        "n_H": str(row["n_H"]),
        "n_L": str(row["n_L"]),
        "n_M": str(row["n_M"]),
        "c_best": format_float(row["c_best"]),
        "recommend_index": _optional_int(row["recommend_index"]),
        "utility_gap": format_float(row["utility_gap"]),
        "status": row["status"],
    }


def _format_curve_row(row: CurveRow) -> Dict[str, str]:
    return {
        "method": row["method"],
        "setting": row["setting"],
        "problem": row["problem"],
        "iteration": str(row["iteration"]),
        "mean_utility_gap": format_float(row["mean_utility_gap"]),
        "n_reps": str(row["n_reps"]),
    }


def _write(path: Path, header: Sequence[str], rows: List[Dict[str, str]], comment: Optional[str] = None):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            if comment:
                f.write(comment + "\n")
            writer = csv.DictWriter(f, fieldnames=list(header), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    except OSError as e:
        raise ExportError(str(e), path, "CSV") from e


def export_trace(trace: RunTrace, path: Path) -> None:
    """Write one trace_<rep>.csv (header plus one row per iteration)."""
    _write(Path(path), OutputFiles.TRACE_HEADER,
           [_format_trace_row(trace_row(record)) for record in trace.records])


def export_summary(results: Sequence, path: Path) -> None:
    rows = [_format_curve_row(row) for result in results for row in curve_rows(result)]
    _write(Path(path), OutputFiles.SUMMARY_HEADER, rows, OutputFiles.SUMMARY_COMMENT)


def emit_csv(results: Sequence, out_dir: Path) -> List[Path]:
    """
    Write summary.csv and the per-replication traces.

    Args:
        results: ReplicationResults, one per method, in output order
        out_dir: Output directory; with several methods each gets a subdirectory for its traces

    Returns:
        Paths written
    """
    out_dir = Path(out_dir)
    written = []
    summary_path = out_dir / OutputFiles.SUMMARY
    export_summary(results, summary_path)
    written.append(summary_path)

    nested = len(results) > 1
    for result in results:
        trace_dir = out_dir / result.method if nested else out_dir
        for rep, trace in enumerate(result.traces):
            path = trace_dir / OutputFiles.TRACE_TEMPLATE.format(rep=rep)
            export_trace(trace, path)
            written.append(path)

    logger.info(f"Wrote {len(written)} CSV file(s) to {out_dir}")
    return written


def load_summary(path: Path) -> Dict[str, np.ndarray]:
    """Read summary.csv back into {method: mean utility gap curve}."""
    curves: Dict[str, List[float]] = {}
    with open(path, "r", encoding="utf-8", newline="") as f:
        lines = [line for line in f if not line.startswith("#")]
    for row in csv.DictReader(lines):
        curves.setdefault(row["method"], []).append(float(row["mean_utility_gap"]))
    return {method: np.array(values) for method, values in curves.items()}
