"""CLI behavior: output bytes, exit codes, subprocess entry points."""

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

import trimoduli as tm
from trimoduli.cli import main


class TestEnumerateCommand:
    def test_stdout_matches_naive_census(self, capsys):
        assert main(["enumerate", "--n", "1", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        expected = tm.export_weighted_set(tm.enumerate_naive((-1, 1, -1, 1)), "csv")
        assert out == expected

    def test_json_format(self, capsys):
        assert main(["enumerate", "--n", "1", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema"] == "trimoduli.weighted-set.v1"
        assert doc["total_weight"] == 76

    def test_file_output_reruns_byte_identical(self, tmp_path):
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["enumerate", "--n", "2", "--out", str(f1)]) == 0
        assert main(["enumerate", "--n", "2", "--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_worker_env_does_not_change_bytes(self, tmp_path, monkeypatch):
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        monkeypatch.setenv(tm.ENV_THREADS, "1")
        assert main(["enumerate", "--n", "2", "--out", str(f1)]) == 0
        monkeypatch.setenv(tm.ENV_THREADS, "2")
        assert main(["enumerate", "--n", "2", "--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()


class TestExitCodes:
    def test_usage_error_is_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["bogus-command"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["enumerate"])  # missing --n
        assert exc.value.code == 2

    def test_guard_violation_is_3(self, capsys):
        assert main(["enumerate", "--n", "0"]) == 3
        assert "error:" in capsys.readouterr().err

    def test_invalid_triangle_sides_is_3(self, capsys):
        assert main(["approx", "--a", "1", "--b", "1", "--c", "5", "--eps", "0.01"]) == 3

    def test_precision_failure_is_4(self, capsys, monkeypatch):
        def explode(target, eps):
            raise tm.PrecisionError("post-condition failed")

        monkeypatch.setattr("trimoduli.cli.approximate_shape", explode)
        code = main(["approx", "--a", "3", "--b", "4", "--c", "5", "--eps", "0.01"])
        assert code == 4
        assert "error:" in capsys.readouterr().err

    def test_io_failure_is_1(self, tmp_path, capsys):
        out = tmp_path / "no-such-dir" / "x.csv"
        assert main(["enumerate", "--n", "1", "--out", str(out)]) == 1
        assert "error:" in capsys.readouterr().err

    def test_plot_requires_out(self):
        with pytest.raises(SystemExit) as exc:
            main(["plot-curve", "--n-max", "3"])
        assert exc.value.code == 2


class TestApproxCommand:
    def test_witness_meets_eps(self, capsys):
        assert main(["approx", "--a", "3", "--b", "4", "--c", "5", "--eps", "1e-3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema"] == "trimoduli.approximant.v1"
        assert doc["distance"] < 1e-3
        assert doc["target"] == [0.5, 2.0 / 3.0, 5.0 / 6.0]
        for x, y in doc["vertices"]:
            assert isinstance(x, int) and isinstance(y, int)

    def test_sides_normalized_any_order_any_scale(self, capsys):
        assert main(["approx", "--a", "50", "--b", "40", "--c", "30", "--eps", "1e-2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["target"] == [0.5, 2.0 / 3.0, 5.0 / 6.0]


class TestReportAndCurve:
    def test_report_json(self, capsys):
        assert main(["report", "--n", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema"] == "trimoduli.equidist-report.v1"
        assert doc["n"] == 2
        assert doc["empirical_ratio"] == pytest.approx(0.534450, abs=1e-6)

    def test_curve_csv(self, capsys):
        assert main(["curve", "--n-max", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "# schema: trimoduli.obtuse-curve.v1"
        assert len(lines) == 4  # schema, header, n=2, n=3


class TestMonteCarloCommands:
    def test_mc_obtuse_deterministic(self, capsys):
        assert main(["mc-obtuse", "--samples", "2000", "--seed", "9"]) == 0
        first = capsys.readouterr().out
        assert main(["mc-obtuse", "--samples", "2000", "--seed", "9"]) == 0
        assert capsys.readouterr().out == first
        doc = json.loads(first)
        assert doc["kind"] == "obtuse" and doc["samples"] == 2000

    def test_mc_distance(self, capsys):
        assert main(["mc-distance", "--samples", "2000", "--seed", "9"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["kind"] == "pair-distance"
        assert 0.4 < doc["mean"] < 0.6

    def test_hist_csv_meta(self, capsys):
        assert main(["hist", "--samples", "1000", "--bins", "8", "--seed", "1"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "# schema: trimoduli.histogram.v1"
        assert "mode=labeled" in lines[1]

    def test_hist_sorted_mode(self, capsys):
        code = main(
            ["hist", "--samples", "1000", "--bins", "8", "--seed", "1", "--mode", "sorted"]
        )
        assert code == 0
        assert "mode=sorted" in capsys.readouterr().out.splitlines()[1]


class TestPlotCommands:
    def test_plot_shapes_writes_svg(self, tmp_path):
        out = tmp_path / "shapes.svg"
        assert main(["plot-shapes", "--n", "2", "--out", str(out)]) == 0
        root = ET.parse(out).getroot()
        assert root.tag.endswith("svg")

    def test_plot_curve_writes_svg(self, tmp_path):
        out = tmp_path / "curve.svg"
        assert main(["plot-curve", "--n-max", "3", "--out", str(out)]) == 0
        root = ET.parse(out).getroot()
        assert root.tag.endswith("svg")


class TestSubprocessEntryPoints:
    def test_module_invocation(self, capsys):
        proc = subprocess.run(
            [sys.executable, "-m", "trimoduli", "enumerate", "--n", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert main(["enumerate", "--n", "1"]) == 0
        assert proc.stdout == capsys.readouterr().out

    def test_console_script_help(self):
        proc = subprocess.run(
            ["trimoduli", "--help"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert "census" in proc.stdout
