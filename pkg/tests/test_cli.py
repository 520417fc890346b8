import csv
import io
import json
import math
import subprocess
import sys

import pytest

from cmlog.cli import main
from cmlog.density import T0, rho


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_eval_at_one(capsys):
    code, out, _ = run(["eval", "--re", "1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["G_direct_re"] == 0.0 and doc["G_direct_im"] == 0.0
    assert abs(doc["G_representation_re"]) < 1e-8


def test_eval_bound_at_three(capsys):
    code, out, _ = run(["eval", "--re", "3", "--format", "json"], capsys)
    g = json.loads(out)["G_direct_re"]
    assert code == 0 and 2 / 3 < g < 1


def test_eval_text(capsys):
    code, out, _ = run(["eval", "--re", "2", "--im", "1"], capsys)
    assert code == 0
    assert "abs_difference" in out and "G_prime_im" in out


def test_eval_on_cut_is_domain_error(capsys):
    code, _, err = run(["eval", "--re", "-1"], capsys)
    assert code == 2 and err


def test_eval_boundary(capsys):
    code, out, _ = run(["eval", "--re", "-1", "--boundary", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["G_boundary_re"] == 0.0 and doc["G_boundary_im"] == -math.pi
    code, out, _ = run(["eval", "--re", "-1", "--boundary", "--lower", "--format", "json"], capsys)
    assert json.loads(out)["G_boundary_im"] == math.pi


def test_rho_table(capsys):
    code, out, _ = run(["rho-table", "--t-min", "0.5", "--t-max", "1.5", "--points", "11"], capsys)
    data = rows(out)
    assert code == 0 and data[0] == ["t", "rho"] and len(data) == 12
    t = [float(r[0]) for r in data[1:]]
    assert all(b > a for a, b in zip(t, t[1:]))
    for tv, rv in data[1:]:
        assert float(rv) == rho(float(tv))
    at_one = [float(r[1]) for r in data[1:] if float(r[0]) == 1.0]
    assert at_one == [-1.0]


def test_rho_table_defaults_near_t0(capsys):
    code, out, _ = run(["rho-table"], capsys)
    data = [(float(a), float(b)) for a, b in rows(out)[1:]]
    assert code == 0 and len(data) == 500
    nearest = min(data, key=lambda r: abs(r[0] - T0))
    assert abs(nearest[1]) < 0.02


def test_rho_table_two_points(capsys):
    code, out, _ = run(["rho-table", "--points", "2"], capsys)
    assert code == 0 and len(rows(out)) == 3


@pytest.mark.parametrize("argv", [["rho-table", "--t-min", "2", "--t-max", "1"],
                                  ["rho-table", "--t-min", "0"],
                                  ["rho-table", "--points", "1"],
                                  ["phi-table", "--s-max", "0"],
                                  ["moments", "--x", "0"],
                                  ["moments", "--x", "1", "--k-max", "41"],
                                  ["eval", "--re", "1", "--tol", "1"]])
def test_usage_errors(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_argparse_error_exit_code(capsys):
    code, _, err = run(["no-such-command"], capsys)
    assert code == 2 and "invalid choice" in err


def test_phi_table(capsys):
    code, out, _ = run(["phi-table", "--s-max", "5", "--points", "11"], capsys)
    data = rows(out)
    assert code == 0 and data[0] == ["s", "phi"]
    vals = [float(r[1]) for r in data[1:]]
    assert all(v > 0 for v in vals)
    assert vals[0] == pytest.approx(0.5, abs=1e-9)


def test_moments(capsys):
    code, out, _ = run(["moments", "--x", "1", "--k-max", "5"], capsys)
    data = rows(out)
    assert code == 0 and data[0] == ["k", "moment", "derivative", "sign_ok"]
    assert [r[0] for r in data[1:]] == ["1", "2", "3", "4", "5"]
    assert all(r[3] == "true" for r in data[1:])
    for k, m, d, _ in data[1:]:
        k = int(k)
        assert float(d) == pytest.approx((-1) ** (k + 1) * math.factorial(k) * float(m), rel=1e-15)


def test_csv_deterministic(capsys):
    _, a, _ = run(["moments", "--x", "2", "--k-max", "3"], capsys)
    _, b, _ = run(["moments", "--x", "2", "--k-max", "3"], capsys)
    assert a == b and "\r" not in a


def test_verify_single_suite(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, err = run(["verify", "--suite", "check_integral_bounds", "-o", str(path)], capsys)
    doc = json.loads(path.read_text())
    assert code == 0 and "PASS" in err
    labels = {o["label"] for o in doc["results"][0]["observed"]}
    assert {"int_0_1", "int_1_2", "int_2_inf"} <= labels


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(["verify", "--suite", "check_phi_zero"], capsys)
    assert code == 1
    assert json.loads(out)["summary"]["failed"] == 1


def test_verify_unknown_suite(capsys):
    code, _, err = run(["verify", "--suite", "no_such_check"], capsys)
    assert code == 2 and "no_such_check" in err


def test_verify_mutation(capsys):
    code, out, _ = run(["verify", "--suite", "check_phi_positivity", "--mutate"], capsys)
    assert code == 1


def test_io_error(tmp_path, capsys):
    bad = tmp_path / "missing" / "out.csv"
    code, _, _ = run(["rho-table", "--points", "2", "-o", str(bad)], capsys)
    assert code == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cmlog", "eval", "--re", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "G_direct_re: 0" in proc.stdout
