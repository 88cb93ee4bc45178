import math
import os

import pytest

from cosasym.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAIL, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_pi_point(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--dim", "1", "--alpha", "1",
            "--theta", "3.141592653589793", "--method", "kernel",
            "--shells", "100000",
        )
        assert code == EXIT_OK
        fields = dict(p.split("=") for p in out.split())
        value, bound = float(fields["value"]), float(fields["tail_bound"])
        assert abs(value - math.pi**2 / 2) <= bound
        assert fields["shells"] == "100000"

    def test_zero_point(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--dim", "2", "--alpha", "0.5", "--theta", "0,0"
        )
        assert code == EXIT_OK
        assert out.startswith("value=0.0 ")

    def test_methods_agree(self, capsys):
        args = ["--dim", "2", "--alpha", "0.5", "--theta", "0.5,0.7", "--shells", "500"]
        _, out_l, _ = run(capsys, "eval", *args, "--method", "lattice")
        _, out_k, _ = run(capsys, "eval", *args, "--method", "kernel")
        fl = dict(p.split("=") for p in out_l.split())
        fk = dict(p.split("=") for p in out_k.split())
        delta = abs(float(fl["value"]) - float(fk["value"]))
        assert delta <= float(fl["tail_bound"]) + float(fk["tail_bound"])

    def test_bad_theta(self, capsys):
        code, _, err = run(capsys, "eval", "--dim", "2", "--alpha", "0.5", "--theta", "oops")
        assert code == EXIT_USAGE
        assert "error" in err

    def test_dim_mismatch(self, capsys):
        code, _, _ = run(capsys, "eval", "--dim", "3", "--alpha", "0.5", "--theta", "0.1,0.2")
        assert code == EXIT_USAGE

    def test_budget_infeasible(self, capsys):
        code, _, err = run(
            capsys, "eval", "--dim", "1", "--alpha", "0.2",
            "--theta", "0.3", "--tol", "1e-9",
        )
        assert code == EXIT_BUDGET
        assert "budget" in err


class TestAsym:
    def test_d2(self, capsys):
        code, out, _ = run(capsys, "asym", "--dim", "2", "--alpha", "0.5", "--theta", "0.01,0.01")
        assert code == EXIT_OK
        assert "regime=sub2" in out


class TestVerify:
    def test_theorem3_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "theorem3", "--dim", "2", "--alpha", "1", "--theta", "1,1"
        )
        assert code == EXIT_OK
        assert "pass" in out

    def test_ratio_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "ratio", "--dim", "2", "--alpha", "0.5",
            "--ray", "1,1", "--from", "1e-1", "--to", "1e-2",
            "--points", "2", "--tol", "0.02",
        )
        assert code == EXIT_OK
        assert out.count("pass") == 2

    def test_ratio_fail_exit_code(self, capsys):
        # an absurdly tight cap must produce a verification failure
        code, out, _ = run(
            capsys, "verify", "ratio", "--dim", "2", "--alpha", "1.5",
            "--ray", "1,1", "--from", "1e-1", "--to", "5e-2",
            "--points", "2", "--tol", "1e-6",
        )
        assert code == EXIT_VERIFY_FAIL

    def test_missing_ray(self, capsys):
        code, _, err = run(capsys, "verify", "ratio", "--dim", "2", "--alpha", "0.5")
        assert code == EXIT_USAGE

    def test_theorem4_sandwich(self, capsys):
        code, out, _ = run(
            capsys, "verify", "theorem4", "--dim", "2", "--alpha", "0.8",
            "--ray", "1,0.7", "--from", "0.3", "--to", "0.05", "--points", "2",
            "--perturb", "noise:0.5,2,42", "--shells", "400",
        )
        assert code == EXIT_OK
        assert out.count("pass") == 2


class TestSweep:
    def test_even_column_and_determinism(self, capsys):
        args = [
            "sweep", "--dim", "1", "--alpha", "0.5",
            "--grid=-1.0:1.0:9", "--columns", "F,asym", "--shells", "400",
        ]
        code, out1, _ = run(capsys, *args)
        assert code == EXIT_OK
        code, out2, _ = run(capsys, *args)
        assert out1 == out2  # byte-identical reruns
        lines = out1.strip().splitlines()
        assert lines[0] == "theta_1,F,asym"
        assert len(lines) == 10
        rows = [line.split(",") for line in lines[1:]]
        by_theta = {float(r[0]): float(r[1]) for r in rows}
        for t in (0.25, 0.75, 1.0):
            assert by_theta[t] == pytest.approx(by_theta[-t], abs=1e-10)

    def test_grid_rows_d2(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--dim", "2", "--alpha", "0.5",
            "--grid", "0.1:0.5:4", "--columns", "F", "--shells", "200",
        )
        assert code == EXIT_OK
        assert len(out.strip().splitlines()) == 1 + 16

    def test_out_file_atomic(self, tmp_path, capsys):
        out_path = tmp_path / "grid.csv"
        code, out, _ = run(
            capsys, "sweep", "--dim", "1", "--alpha", "0.5",
            "--grid", "0.1:0.5:3", "--columns", "F", "--shells", "200",
            "--out", str(out_path),
        )
        assert code == EXIT_OK
        assert out == ""
        text = out_path.read_text()
        assert text.startswith("theta_1,F\n")
        assert not [p for p in os.listdir(tmp_path) if p.endswith(".tmp")]

    def test_bad_grid(self, capsys):
        code, _, _ = run(
            capsys, "sweep", "--dim", "1", "--alpha", "0.5", "--grid", "1:0:5"
        )
        assert code == EXIT_USAGE

    def test_bad_column(self, capsys):
        code, _, _ = run(
            capsys, "sweep", "--dim", "1", "--alpha", "0.5",
            "--grid", "0:1:3", "--columns", "F,nope",
        )
        assert code == EXIT_USAGE
