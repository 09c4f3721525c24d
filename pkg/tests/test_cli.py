"""Tests for the eqgirth command-line interface."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from eqgirth.cli import app
from eqgirth.conf import settings
from eqgirth.conf.global_settings import RunConfig
from eqgirth.conf.helper import override_settings

runner = CliRunner()

CSV_ARGS = ["--output-format", "csv"]


class TestCommands:
    """Test cases for the check subcommands."""

    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_bounds(self, tmp_path: Path) -> None:
        """Test that bounds exits 0 and writes its JSON report."""
        result = runner.invoke(app, ["bounds", "--out", str(tmp_path)])
        assert result.exit_code == 0
        data = json.loads((tmp_path / "bounds.json").read_text())
        assert data["schema"] == 1
        assert data["subcommand"] == "bounds"
        assert data["config"]["delta"] == 0.01
        assert data["wall_time_ms"] is None
        assert all(r["pass"] for r in data["results"])

    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_report_is_deterministic(self, tmp_path: Path) -> None:
        """Test that two runs with the same configuration write identical reports."""
        first, second = tmp_path / "first", tmp_path / "second"
        for out in (first, second):
            assert runner.invoke(app, ["perturb", "--r", "2", "--s", "5", "--out", str(out)]).exit_code == 0
        assert (first / "perturb.json").read_bytes() == (second / "perturb.json").read_bytes()

    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=True)
    def test_timing(self, tmp_path: Path) -> None:
        """Test that the wall time is recorded when enabled."""
        runner.invoke(app, ["bounds", "--out", str(tmp_path)])
        data = json.loads((tmp_path / "bounds.json").read_text())
        assert data["wall_time_ms"] >= 0

    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_csv_dumps(self, tmp_path: Path) -> None:
        """Test that --output-format csv writes the tables next to the report."""
        result = runner.invoke(app, ["winding", *CSV_ARGS, "--out", str(tmp_path)])
        assert result.exit_code == 0
        assert (tmp_path / "winding.json").exists()
        header = (tmp_path / "winding_loop.csv").read_text().splitlines()[0]
        assert header == "radius,s,chart_angle,evaluation_angle"

    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_overrides_reach_report(self, tmp_path: Path) -> None:
        """Test that CLI options end up in the recorded configuration."""
        runner.invoke(app, ["perturb", "--amplitude", "0.02", "--r", "1", "--s", "4", "--out", str(tmp_path)])
        config = json.loads((tmp_path / "perturb.json").read_text())["config"]
        assert (config["amplitude"], config["r"], config["s"]) == (0.02, 1, 4)
        assert settings.RUN.amplitude == 0.02

    @pytest.mark.parametrize(
        ("args", "amplitude", "delta"),
        [
            (["--delta", "0.08"], 0.08, 0.01),
            (["--delta", "0.08", "--amplitude", "0.02"], 0.02, 0.08),
        ],
    )
    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_perturb_delta_is_amplitude(self, args: list[str], amplitude: float, delta: float, tmp_path: Path) -> None:
        """Test that perturb reads --delta as the graph amplitude unless --amplitude is given."""
        result = runner.invoke(app, ["perturb", *args, "--r", "1", "--s", "4", "--out", str(tmp_path)])
        assert result.exit_code == 0
        config = json.loads((tmp_path / "perturb.json").read_text())["config"]
        assert (config["amplitude"], config["delta"]) == (amplitude, delta)

    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_failing_check(self, tmp_path: Path) -> None:
        """Test that a failed statement exits 1 and is reported."""
        result = runner.invoke(app, ["perturb", "--r", "3", "--s", "3", "--out", str(tmp_path)])
        assert result.exit_code == 1
        data = json.loads((tmp_path / "perturb.json").read_text())
        assert data["results"][-1]["pass"] is False
        assert data["results"][-1]["error"].startswith("DegeneracyError")


class TestInvalidConfiguration:
    """Test cases for exit code 2."""

    @pytest.mark.parametrize(
        "args",
        [
            ["bounds", "--delta", "0.5"],
            ["optimize", "--resolution", "1/5"],
            ["diameter", "--grid-theta", "16"],
            ["bounds", "--pipe-slack-mode", "three_delta"],
            ["no-such-check"],
        ],
    )
    @override_settings(OUT_DIR=Path("eqgirth-out"), RUN=RunConfig(), RECORD_TIMING=False)
    def test_exit_two(self, args: list[str], tmp_path: Path) -> None:
        """Test that invalid parameters and unknown subcommands exit 2."""
        result = runner.invoke(app, [*args, "--out", str(tmp_path)])
        assert result.exit_code == 2
        assert not (tmp_path / f"{args[0]}.json").exists()


class TestListChecks:
    """Test cases for list-checks command."""

    def test_lists_every_check(self) -> None:
        """Test that every subcommand is listed."""
        result = runner.invoke(app, ["list-checks"])
        assert result.exit_code == 0
        for name in ("bounds", "case-split", "diameter", "optimize", "perturb", "winding"):
            assert name in result.output
