"""Tests for the bench management command."""

import json
import sys
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from config import cli


def bench(*args):
    out = StringIO()
    call_command("bench", *args, stdout=out)
    return out.getvalue()


class TestRunCommand:
    """Test ``bench run``."""

    def test_run_writes_outputs(self, config_file, tmp_path):
        """Test a passing suite writes CSVs and summary.json."""
        out_dir = tmp_path / "out"
        output = bench("run", "--config", str(config_file()), "--out", str(out_dir))
        assert "checks passed" in output
        assert (out_dir / "run_crhvt_0.csv").exists()
        assert (out_dir / "summary.json").exists()

    def test_overrides(self, config_file, tmp_path):
        """Test --algo, --T, --C, --noise and --seed replace config values."""
        out_dir = tmp_path / "out"
        bench(
            "run",
            "--config", str(config_file()),
            "--algo", "hvtucb",
            "--algo", "oful",
            "--T", "12",
            "--C", "1.5",
            "--noise", "centered_pareto",
            "--seed", "3",
            "--seed", "4",
            "--out", str(out_dir),
        )
        config = json.loads((out_dir / "summary.json").read_text(encoding="utf-8"))["config"]
        assert config["algos"] == ["hvtucb", "oful"]
        assert config["T"] == 12
        assert config["corruption"]["budget"] == 1.5
        assert config["noise"]["variant"] == "centered_pareto"
        assert sorted(p.name for p in out_dir.glob("*.csv")) == [
            "run_hvtucb_3.csv",
            "run_hvtucb_4.csv",
            "run_oful_3.csv",
            "run_oful_4.csv",
        ]

    def test_plot_flag(self, config_file, tmp_path):
        """Test --plot adds the SVG charts."""
        out_dir = tmp_path / "out"
        bench("run", "--config", str(config_file()), "--out", str(out_dir), "--plot")
        assert (out_dir / "regret.svg").exists()
        assert (out_dir / "runtime.svg").exists()

    def test_default_output_dir(self, config_file, tmp_path, settings):
        """Test BENCH_OUTPUT_DIR is used without --out."""
        settings.BENCH_OUTPUT_DIR = tmp_path / "default"
        bench("run", "--config", str(config_file()))
        assert (tmp_path / "default" / "summary.json").exists()

    def test_invalid_config_exits_nonzero(self, config_file, tmp_path):
        """Test a bad config is a command error with exit code 1."""
        with pytest.raises(CommandError) as excinfo:
            bench("run", "--config", str(config_file(T=0)), "--out", str(tmp_path))
        assert excinfo.value.returncode == 1
        assert "invalid-config" in str(excinfo.value)

    def test_missing_config_file(self, tmp_path):
        """Test a missing config file is reported."""
        with pytest.raises(CommandError):
            bench("run", "--config", str(tmp_path / "nope.json"), "--out", str(tmp_path))

    def test_unwritable_output_fails_fast(self, config_file, tmp_path):
        """Test an unwritable --out fails before running."""
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(CommandError) as excinfo:
            bench("run", "--config", str(config_file()), "--out", str(blocker / "sub"))
        assert "output-unwritable" in str(excinfo.value)

    def test_failed_run_exits_nonzero(self, config_file, tmp_path, monkeypatch):
        """Test a numeric failure in any run gives exit code 1."""
        from apps.core.errors import NumericFailureError
        from apps.policies import CrHvtPolicy

        def failing(self, x, r, nu_t):
            raise NumericFailureError("boom", {"round": 1})

        monkeypatch.setattr(CrHvtPolicy, "observe", failing)
        with pytest.raises(CommandError) as excinfo:
            bench("run", "--config", str(config_file()), "--out", str(tmp_path / "out"))
        assert excinfo.value.returncode == 1


class TestVerifyCommand:
    """Test ``bench verify``."""

    def test_verify_passes(self, config_file, tmp_path):
        """Test self-checks and run invariants pass without writing outputs."""
        output = bench("verify", "--config", str(config_file(corruption={"budget": 2.0})))
        assert "rank_one_sync" in output
        assert "elliptical_potential" in output
        assert "FAIL" not in output
        assert not list(tmp_path.glob("*.csv"))


class TestConsoleScript:
    """Test the ``bench`` console entry point."""

    def test_forwards_arguments(self, config_file, tmp_path, monkeypatch):
        """Test ``bench run ...`` reaches the management command."""
        out_dir = tmp_path / "out"
        argv = ["bench", "run", "--config", str(config_file()), "--out", str(out_dir)]
        monkeypatch.setattr(sys, "argv", argv)
        cli.main()
        assert (out_dir / "summary.json").exists()

    def test_exit_code_on_bad_config(self, config_file, tmp_path, monkeypatch):
        """Test an invalid config exits with status 1."""
        argv = ["bench", "run", "--config", str(config_file(T=0)), "--out", str(tmp_path)]
        monkeypatch.setattr(sys, "argv", argv)
        with pytest.raises(SystemExit) as excinfo:
            cli.main()
        assert excinfo.value.code == 1
