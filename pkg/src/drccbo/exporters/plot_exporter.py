"""Static SVG figure of the mean utility-gap curves."""

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from drccbo.core.constants import OutputFiles  # noqa: E402
from drccbo.core.exceptions import ExportError  # noqa: E402
from drccbo.utils.logger import get_logger  # noqa: E402

logger = get_logger(__name__)

# fixed ids and no timestamp so identical curves give identical files
_SVG_RC = {"svg.hashsalt": "drccbo", "svg.fonttype": "path"}


def use_log_scale(curves: Sequence[np.ndarray]) -> bool:
    """Log vertical axis only when every plotted value is strictly positive."""
    return all(np.all(np.asarray(curve) > 0) for curve in curves)


def emit_plot(results: Sequence, out_dir: Path) -> Path:
    """
    Plot one polyline per method (legend in result order) into utility_gap.svg.

    Args:
        results: ReplicationResults
        out_dir: Output directory

    Returns:
        Path of the SVG file
    """
    if not results:
        raise ExportError("no curve to plot", format_type="SVG")
    out_dir = Path(out_dir)
    path = out_dir / OutputFiles.PLOT

    with matplotlib.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        try:
            for result in results:
                iterations = np.arange(1, len(result.curve) + 1)
                ax.plot(iterations, result.curve, label=result.method, linewidth=1.5)
            if use_log_scale([result.curve for result in results]):
                ax.set_yscale("log")
            first = results[0]
            ax.set_title(f"{first.problem} ({first.setting})")
            ax.set_xlabel("Iteration")
            ax.set_ylabel("Mean utility gap")
            ax.grid(True, alpha=0.3)
            ax.legend(loc="best")
            fig.tight_layout()
            out_dir.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as e:
            raise ExportError(str(e), path, "SVG") from e
        finally:
            plt.close(fig)

    logger.info(f"Wrote plot {path}")
    return path
