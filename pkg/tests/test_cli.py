"""End-to-end tests for the command-line entry point."""

import json

import pytest

from drccbo.cli import build_parser, main
from drccbo.core.constants import EnvVars, ExitCodes, Methods, OutputFiles

from conftest import SMALL_GRID


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in (EnvVars.LOG_LEVEL, EnvVars.MAX_WORKERS, EnvVars.SIR_CACHE):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"problem": "synthetic", "grid": SMALL_GRID, "iterations": 3}), encoding="utf-8")
    return path


def _run(config_file, out, *extra):
    return main(["run", "--config", str(config_file), "--reps", "2", "--out", str(out),
                 "--workers", "1", "--no-progress", *extra])


class TestParser:

    def test_run_flags(self):
        args = build_parser().parse_args(["run", "--preset", "synthetic", "--method", "us,random", "--reps", "4"])
        assert (args.command, args.preset, args.method, args.reps) == ("run", "synthetic", "us,random", 4)

    def test_config_and_preset_are_exclusive(self, tmp_path):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["run", "--config", str(tmp_path / "a.json"), "--preset", "synthetic"])


class TestRunCommand:

    def test_writes_outputs(self, tmp_path, config_file, capsys):
        out = tmp_path / "out"
        assert _run(config_file, out) == ExitCodes.OK
        assert (out / OutputFiles.SUMMARY).is_file()
        assert (out / "trace_0.csv").is_file()
        assert (out / "trace_1.csv").is_file()
        assert (out / OutputFiles.PLOT).is_file()
        assert Methods.PROPOSED in capsys.readouterr().out

    def test_summary_is_reproducible(self, tmp_path, config_file):
        assert _run(config_file, tmp_path / "a", "--seed", "5") == ExitCodes.OK
        assert _run(config_file, tmp_path / "b", "--seed", "5") == ExitCodes.OK
        first = (tmp_path / "a" / OutputFiles.SUMMARY).read_bytes()
        assert first == (tmp_path / "b" / OutputFiles.SUMMARY).read_bytes()

    def test_several_methods(self, tmp_path, config_file):
        out = tmp_path / "out"
        assert _run(config_file, out, "--method", "random,us") == ExitCodes.OK
        assert (out / Methods.RANDOM / "trace_0.csv").is_file()
        assert (out / Methods.US / "trace_1.csv").is_file()

    def test_unknown_method(self, tmp_path, config_file):
        assert _run(config_file, tmp_path, "--method", "thompson") == ExitCodes.CONFIG_ERROR

    def test_missing_config_file(self, tmp_path):
        assert _run(tmp_path / "absent.yaml", tmp_path / "out") == ExitCodes.CONFIG_ERROR

    def test_config_source_required(self, tmp_path):
        assert main(["run", "--out", str(tmp_path)]) == ExitCodes.CONFIG_ERROR

    def test_bad_worker_count(self, tmp_path, config_file):
        assert main(["run", "--config", str(config_file), "--out", str(tmp_path), "--workers", "0"]) \
            == ExitCodes.CONFIG_ERROR

    def test_bad_environment(self, tmp_path, config_file, monkeypatch):
        monkeypatch.setenv(EnvVars.MAX_WORKERS, "lots")
        assert _run(config_file, tmp_path) == ExitCodes.CONFIG_ERROR


@pytest.mark.slow
class TestPrecomputeSir:

    def test_writes_cache(self, tmp_path, capsys):
        path = tmp_path / "sir.json"
        assert main(["precompute-sir", "--out", str(path)]) == ExitCodes.OK
        document = json.loads(path.read_text(encoding="utf-8"))
        assert set(document) == {"header", "values"}
        assert "cached at" in capsys.readouterr().out
