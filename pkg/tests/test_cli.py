import csv
import json
import math

import numpy as np
import pytest

from fracft import (Family, TransformSpec, frft_kernel, gaussian_signal,
                    gfrt_kernel, make_grid, read_signal, transform_signal,
                    write_signal)
from fracft.cli import CliConfig, main

GRID_N = 256
GRID_L = 10.0


@pytest.fixture(scope="module")
def signal_file(tmp_path_factory):
    grid = make_grid(GRID_L, GRID_N)
    path = tmp_path_factory.mktemp("signals") / "gaussian.csv"
    write_signal(gaussian_signal(grid), path)
    return path


def rel_l2(grid, got, want):
    num = math.sqrt(float(np.sum(grid.weights * np.abs(got - want) ** 2)))
    den = math.sqrt(float(np.sum(grid.weights * np.abs(want) ** 2)))
    return num / den


class TestTransformCommand:
    def test_quarter_turn_fixes_gaussian(self, signal_file, tmp_path):
        out_path = tmp_path / "out.csv"
        rc = main(["transform", "--family", "frft", "--alpha", str(math.pi / 2),
                   "--input", str(signal_file), "--output", str(out_path)])
        assert rc == 0
        out = read_signal(out_path)
        want = gaussian_signal(out.grid)
        assert rel_l2(out.grid, out.values, want.values) < 1e-8

    def test_output_file_round_trips_library_values(self, signal_file, tmp_path):
        out_path = tmp_path / "out.csv"
        rc = main(["transform", "--family", "gfrt", "--alpha", "0.5",
                   "--theta", "0.0", "--input", str(signal_file),
                   "--output", str(out_path)])
        assert rc == 0
        out = read_signal(out_path)
        spec = TransformSpec(Family.GFRT, 0.5, theta=0.0)
        want = transform_signal(spec, gaussian_signal(out.grid))
        assert np.array_equal(out.values, want.values)

    def test_zero_order_shortcut(self, signal_file, tmp_path, capsys):
        out_path = tmp_path / "out.csv"
        rc = main(["transform", "--family", "frft", "--alpha", "0",
                   "--input", str(signal_file), "--output", str(out_path)])
        assert rc == 0
        assert "identity" in capsys.readouterr().err
        out = read_signal(out_path)
        assert np.array_equal(out.values, read_signal(signal_file).values)

    def test_half_turn_shortcut_reverses(self, signal_file, tmp_path, capsys):
        out_path = tmp_path / "out.csv"
        rc = main(["transform", "--family", "frft", "--alpha", str(math.pi),
                   "--input", str(signal_file), "--output", str(out_path)])
        assert rc == 0
        assert "parity" in capsys.readouterr().err
        out = read_signal(out_path)
        assert np.array_equal(out.values, read_signal(signal_file).values[::-1])

    def test_stdout_csv_and_parseval_note(self, signal_file, capsys):
        rc = main(["transform", "--family", "frft", "--alpha", "0.7",
                   "--input", str(signal_file)])
        assert rc == 0
        captured = capsys.readouterr()
        lines = captured.out.strip().splitlines()
        assert lines[0].strip() == "x,re,im"
        assert len(lines) == GRID_N + 1
        assert "parseval ratio: 1.0000" in captured.err

    def test_spectral_method_matches_quadrature(self, signal_file, tmp_path):
        quad_path = tmp_path / "quad.csv"
        spec_path = tmp_path / "spec.csv"
        base = ["transform", "--family", "frft", "--alpha", "0.9",
                "--input", str(signal_file)]
        assert main(base + ["--output", str(quad_path)]) == 0
        assert main(base + ["--method", "spectral", "--max-order", "40",
                            "--output", str(spec_path)]) == 0
        quad = read_signal(quad_path)
        spectral = read_signal(spec_path)
        assert rel_l2(quad.grid, spectral.values, quad.values) < 1e-5

    def test_explicit_grid_flags_must_match_file(self, signal_file, capsys):
        rc = main(["transform", "--family", "frft", "--alpha", "0.7",
                   "--grid-n", "512", "--grid-l", str(GRID_L),
                   "--input", str(signal_file)])
        assert rc == 1
        assert "does not match" in capsys.readouterr().err
        rc = main(["transform", "--family", "frft", "--alpha", "0.7",
                   "--grid-n", str(GRID_N), "--grid-l", "5.0",
                   "--input", str(signal_file)])
        assert rc == 1

    def test_matching_grid_flags_accepted(self, signal_file, tmp_path):
        rc = main(["transform", "--family", "frft", "--alpha", "0.7",
                   "--grid-n", str(GRID_N), "--grid-l", str(GRID_L),
                   "--input", str(signal_file),
                   "--output", str(tmp_path / "out.csv")])
        assert rc == 0

    def test_spectral_rejected_for_hyperbolic_family(self, signal_file, capsys):
        rc = main(["transform", "--family", "gfrt", "--alpha", "0.5",
                   "--theta", "0.1", "--method", "spectral",
                   "--input", str(signal_file)])
        assert rc == 1
        assert "spectral method requires" in capsys.readouterr().err

    def test_theta_family_pairing_enforced(self, signal_file, capsys):
        rc = main(["transform", "--family", "gfrt", "--alpha", "0.5",
                   "--input", str(signal_file)])
        assert rc == 1
        assert "--theta is required" in capsys.readouterr().err
        rc = main(["transform", "--family", "frft", "--alpha", "0.5",
                   "--theta", "0.1", "--input", str(signal_file)])
        assert rc == 1

    def test_missing_input_file(self, tmp_path, capsys):
        rc = main(["transform", "--family", "frft", "--alpha", "0.7",
                   "--input", str(tmp_path / "absent.csv")])
        assert rc == 1
        assert capsys.readouterr().err.startswith("error:")


class TestKernelCommand:
    def test_quarter_turn_values(self, tmp_path):
        out_path = tmp_path / "kernel.csv"
        rc = main(["kernel", "--family", "frft", "--alpha", str(math.pi / 2),
                   "--grid-n", "9", "--grid-l", "1.0", "--output", str(out_path)])
        assert rc == 0
        with open(out_path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["p", "x", "re", "im"]
        assert len(rows) == 1 + 81
        for row in rows[1:]:
            p, x, re, im = map(float, row)
            want = np.exp(-1j * p * x) / math.sqrt(2 * math.pi)
            assert complex(re, im) == pytest.approx(want, rel=1e-12)

    def test_hyperbolic_values_round_trip(self, tmp_path):
        out_path = tmp_path / "kernel.csv"
        rc = main(["kernel", "--family", "gfrt", "--alpha", "0.7",
                   "--theta", "0.3", "--grid-n", "8", "--grid-l", "2.0",
                   "--output", str(out_path)])
        assert rc == 0
        with open(out_path, newline="") as fh:
            rows = list(csv.reader(fh))[1:]
        assert len(rows) == 64
        # the command evaluates the kernel on the full grid at once; the
        # 17-digit CSV format must round-trip those values bit for bit
        grid = make_grid(2.0, 8)
        kernel = gfrt_kernel(0.7, 0.3, grid.points[:, None], grid.points[None, :])
        for i, row in enumerate(rows):
            p, x, re, im = map(float, row)
            assert complex(re, im) == kernel[i // 8, i % 8]
            assert p == grid.points[i // 8] and x == grid.points[i % 8]

    def test_singular_order_refused(self, tmp_path, capsys):
        out_path = tmp_path / "kernel.csv"
        rc = main(["kernel", "--family", "frft", "--alpha", "0",
                   "--output", str(out_path)])
        assert rc == 1
        err = capsys.readouterr().err
        assert "no finite kernel" in err and "identity" in err
        assert not out_path.exists()
        rc = main(["kernel", "--family", "frft", "--alpha", str(math.pi)])
        assert rc == 1
        assert "parity" in capsys.readouterr().err

    def test_stdout_output(self, capsys):
        rc = main(["kernel", "--family", "frft", "--alpha", "0.5",
                   "--grid-n", "8", "--grid-l", "1.0"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].strip() == "p,x,re,im"
        assert len(lines) == 1 + 64
        grid = make_grid(1.0, 8)
        kernel = frft_kernel(0.5, grid.points[:, None], grid.points[None, :])
        p, x, re, im = map(float, lines[1].split(","))
        assert complex(re, im) == kernel[0, 0]


@pytest.fixture(scope="module")
def eigen_dir(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("eigen")
    rc = main(["eigen", "--max-order", "6", "--grid-n", "1025",
               "--grid-l", "10.0", "--output-dir", str(out_dir)])
    assert rc == 0
    return out_dir


class TestEigenCommand:
    def test_writes_one_file_per_order(self, eigen_dir):
        names = sorted(p.name for p in eigen_dir.glob("*.csv"))
        assert names == [f"eigenfunction_{m:03d}.csv" for m in range(7)]

    def test_ground_state_is_real_gaussian(self, eigen_dir):
        sig = read_signal(eigen_dir / "eigenfunction_000.csv")
        assert np.all(sig.values.imag == 0.0)
        assert sig.values[512] == pytest.approx(np.pi ** -0.25, rel=1e-12)

    def test_first_order_is_purely_imaginary(self, eigen_dir):
        sig = read_signal(eigen_dir / "eigenfunction_001.csv")
        assert np.all(sig.values.real == 0.0)
        assert np.max(np.abs(sig.values.imag)) > 0.1

    def test_sixth_order_origin_value(self, eigen_dir):
        # f_6 = i^{-6} h_6 = -h_6, and h_6(0) is negative, so the stored
        # origin sample is positive: 60-digit oracle 0.419891944265038073...
        sig = read_signal(eigen_dir / "eigenfunction_006.csv")
        assert sig.values[512].real == pytest.approx(0.41989194426503807, rel=1e-12)
        assert sig.values[512].imag == 0.0


class TestVerifyCommand:
    def test_none_suite_is_empty_and_passes(self, capsys):
        rc = main(["verify", "--suite", "none"])
        assert rc == 0
        assert capsys.readouterr().out == ""

    def test_default_suite_passes_on_sane_grid(self, capsys):
        rc = main(["verify", "--grid-n", "256", "--grid-l", "10.0"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        reports = [json.loads(line) for line in lines]
        assert len(reports) == 91
        controls = [r for r in reports if r["parameters"].get("negative_control")]
        assert len(controls) == 1 and not controls[0]["passed"]
        assert all(r["passed"] for r in reports
                   if not r["parameters"].get("negative_control"))

    def test_truncated_grid_fails(self, capsys):
        rc = main(["verify", "--grid-n", "256", "--grid-l", "2.0"])
        assert rc == 1
        lines = capsys.readouterr().out.strip().splitlines()
        reports = [json.loads(line) for line in lines]
        failing = {r["check_name"] for r in reports
                   if not r["passed"] and not r["parameters"].get("negative_control")}
        assert "orthogonality" in failing

    def test_report_lines_carry_the_full_schema(self, capsys):
        rc = main(["verify", "--grid-n", "256", "--grid-l", "2.0"])
        assert rc == 1
        for line in capsys.readouterr().out.strip().splitlines():
            decoded = json.loads(line)
            assert set(decoded) == {"check_name", "parameters", "residual",
                                    "tolerance", "passed"}


class TestArgumentParsing:
    def test_missing_subcommand_exits_with_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_family_rejected(self, signal_file):
        with pytest.raises(SystemExit) as exc:
            main(["transform", "--family", "linear", "--alpha", "1",
                  "--input", str(signal_file)])
        assert exc.value.code == 2

    def test_kernel_requires_alpha(self):
        with pytest.raises(SystemExit) as exc:
            main(["kernel", "--family", "frft"])
        assert exc.value.code == 2

    def test_validate_units(self):
        CliConfig("transform", family=Family.FRFT, alpha=0.5).validate()
        CliConfig("transform", family=Family.GFRT, alpha=0.5, theta=0.1).validate()
        with pytest.raises(ValueError):
            CliConfig("transform", family=Family.GFRT, alpha=0.5,
                      method="spectral", theta=0.1).validate()
        with pytest.raises(ValueError):
            CliConfig("transform", family=Family.GFRT, alpha=0.5).validate()
        with pytest.raises(ValueError):
            CliConfig("transform", family=Family.FRFT, alpha=0.5,
                      theta=0.1).validate()
