"""Tests for CSV, SVG and console output."""

import numpy as np
import pytest

from drccbo.core.constants import Methods, OutputFiles, Settings, StopStatuses
from drccbo.core.exceptions import ExportError
from drccbo.core.models import RunTrace, StopKind, TraceRecord
from drccbo.exporters import emit_csv, emit_plot, export_trace, load_summary, print_summary, use_log_scale
from drccbo.harness import ReplicationResult, mean_curve, status_counts


def _trace(method, seed, gaps, final=StopKind.CONTINUE):
    records = []
    for t, gap in enumerate(gaps, start=1):
        terminal = t == len(gaps) and final is not StopKind.CONTINUE
        records.append(TraceRecord(
            t=t, x_index=None if terminal else t % 3, w_index=None if terminal else 1,
            y_f=None if terminal else 0.1 * t, y_g=None if terminal else -2.5,
            n_high=1, n_low=0, n_maybe=2, c_best=0.5, recommendation=None if t == 1 else 0,
            utility_gap=gap, status=final if terminal else StopKind.CONTINUE,
        ))
    return RunTrace(method, Settings.SIMULATOR, "synthetic", seed, records)


def _result(method, traces, iterations):
    return ReplicationResult(method=method, setting=Settings.SIMULATOR, problem="synthetic",
                             seeds=[trace.seed for trace in traces], traces=traces,
                             curve=mean_curve(traces, iterations), n_designs=3,
                             status_counts=status_counts(traces))


@pytest.fixture
def results():
    proposed = _result(Methods.PROPOSED, [_trace(Methods.PROPOSED, 0, [1.0, 0.5, 0.25]),
                                          _trace(Methods.PROPOSED, 1, [2.0, 0.5], StopKind.CONVERGED)], 3)
    us = _result(Methods.US, [_trace(Methods.US, 0, [1.5, 1.5, 1.0]),
                              _trace(Methods.US, 1, [0.5, 0.5, 0.5])], 3)
    return [proposed, us]


class TestCsv:

    def test_trace_file(self, tmp_path):
        path = tmp_path / "trace_0.csv"
        export_trace(_trace(Methods.PROPOSED, 0, [1.0, 0.5, 0.25]), path)
        raw = path.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode("utf-8").splitlines()
        assert len(lines) == 4
        assert lines[0] == ",".join(OutputFiles.TRACE_HEADER)
        assert lines[1] == f"1,1,1,0.1,-2.5,1,0,2,0.5,,1.0,{StopStatuses.CONTINUE}"

    def test_terminal_row_has_empty_point(self, tmp_path):
        path = tmp_path / "trace.csv"
        export_trace(_trace(Methods.PROPOSED, 0, [1.0, 0.0], StopKind.CONVERGED), path)
        last = path.read_text(encoding="utf-8").splitlines()[-1]
        assert last == f"2,,,,,1,0,2,0.5,0,0.0,{StopStatuses.CONVERGED}"

    def test_summary_layout(self, tmp_path, results):
        emit_csv(results, tmp_path)
        lines = (tmp_path / OutputFiles.SUMMARY).read_text(encoding="utf-8").splitlines()
        assert lines[0] == OutputFiles.SUMMARY_COMMENT
        assert lines[1] == ",".join(OutputFiles.SUMMARY_HEADER)
        assert len(lines) == 2 + 3 + 3
        assert lines[2] == "proposed,simulator,synthetic,1,1.5,2"
        # the converged run holds 0.5 for iteration 3
        assert lines[4] == "proposed,simulator,synthetic,3,0.375,2"

    def test_traces_nested_per_method(self, tmp_path, results):
        written = emit_csv(results, tmp_path)
        assert (tmp_path / Methods.PROPOSED / "trace_1.csv").is_file()
        assert (tmp_path / Methods.US / "trace_0.csv").is_file()
        assert len(written) == 1 + 4

    def test_single_method_traces_at_top_level(self, tmp_path, results):
        emit_csv(results[:1], tmp_path)
        assert (tmp_path / "trace_0.csv").is_file()
        assert not (tmp_path / Methods.PROPOSED).exists()

    def test_load_summary(self, tmp_path, results):
        emit_csv(results, tmp_path)
        curves = load_summary(tmp_path / OutputFiles.SUMMARY)
        assert list(curves) == [Methods.PROPOSED, Methods.US]
        np.testing.assert_array_equal(curves[Methods.PROPOSED], results[0].curve)
        np.testing.assert_array_equal(curves[Methods.US], results[1].curve)

    def test_unwritable_target(self, tmp_path, results):
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(ExportError):
            emit_csv(results, blocker / "out")


class TestPlot:

    def test_log_scale_rule(self):
        assert use_log_scale([np.array([1.0, 0.5]), np.array([2.0])])
        assert not use_log_scale([np.array([1.0, 0.0])])
        assert not use_log_scale([np.array([1.0]), np.array([-0.1])])

    def test_svg_written(self, tmp_path, results):
        path = emit_plot(results, tmp_path)
        assert path == tmp_path / OutputFiles.PLOT
        text = path.read_text(encoding="utf-8")
        assert text.lstrip().startswith("<?xml")
        assert "<svg" in text

    def test_svg_is_reproducible(self, tmp_path, results):
        first = emit_plot(results, tmp_path / "a").read_bytes()
        second = emit_plot(results, tmp_path / "b").read_bytes()
        assert first == second

    def test_zero_gaps_fall_back_to_linear(self, tmp_path):
        flat = _result(Methods.RANDOM, [_trace(Methods.RANDOM, 0, [0.0, 0.0])], 2)
        assert emit_plot([flat], tmp_path).is_file()

    def test_nothing_to_plot(self, tmp_path):
        with pytest.raises(ExportError):
            emit_plot([], tmp_path)


class TestConsoleSummary:

    def test_prints_every_method(self, capsys, results):
        print_summary(results)
        out = capsys.readouterr().out
        assert "synthetic / simulator" in out
        assert Methods.PROPOSED in out and Methods.US in out
        assert f"{StopStatuses.CONVERGED}=1" in out

    def test_empty(self, capsys):
        print_summary([])
        assert "No results." in capsys.readouterr().out
