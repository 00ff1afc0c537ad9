import csv
import io
import json
import math
import subprocess
import sys

import pytest

from bohr_lab import cli, radii as rd


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_radius_r_p(capsys):
    code, out = run(capsys, "radius", "--formula", "r_p", "--p", "1", "--a", "1")
    assert code == 0
    assert float(rows(out)[0]["radius"]) == pytest.approx(1 / 3, abs=1e-15)


def test_radius_eq10(capsys):
    code, out = run(capsys, "radius", "--formula", "eq10", "--p", "1", "--k", "0", "--m", "1")
    assert code == 0
    assert float(rows(out)[0]["radius"]) == pytest.approx(math.sqrt(5) - 2, abs=1e-7)


def test_radius_C_p(capsys):
    code, out = run(capsys, "radius", "--formula", "C_p", "--p", "1")
    assert code == 0 and float(rows(out)[0]["radius"]) == 0.5


def test_radius_grid_and_header(capsys):
    code, out = run(capsys, "radius", "--formula", "r_p", "--p", "0.5,1,2", "--a", "0:1:3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:2] == ["p", "a"] and lines[0].endswith("radius")
    assert len(lines) == 10
    got = [float(r["radius"]) for r in rows(out)]
    expected = [rd.r_p(p, a) for p in (0.5, 1.0, 2.0) for a in (0.0, 0.5, 1.0)]
    assert got == pytest.approx(expected, abs=0)


def test_radius_json(capsys):
    code, out = run(capsys, "radius", "--out", "json", "--formula", "alpha_plus", "--a", "0.9")
    assert code == 0
    data = json.loads(out)
    assert data[0]["radius"] == pytest.approx(rd.alpha_plus(0.9))


def test_radius_out_of_range(capsys):
    code, _ = run(capsys, "radius", "--formula", "r_p", "--p", "-1", "--a", "0.5")
    assert code == 3


def test_bad_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["radius", "--formula", "nope"])
    assert exc.value.code == 2


def test_missing_family_is_usage_error(capsys):
    code, _ = run(capsys, "verify", "--theorem", "c6")
    assert code == 2


def test_verify_c6_extremal(capsys):
    code, out = run(capsys, "verify", "--out", "json", "--theorem", "c6", "--p", "1", "--k", "1",
                    "--family", "extremal", "--a", "0")
    assert code == 0
    rep = json.loads(out)[0]
    assert rep["verdict"] == "HOLDS"
    assert rep["predicted_radius"] == pytest.approx(0.2)
    assert set(rep) >= {"params", "verdict", "lhs", "rhs", "crossover_bracket"}


def test_verify_lemma5_precondition_exit(capsys):
    code, _ = run(capsys, "verify", "--theorem", "lemma5", "--family", "extremal", "--a", "0.5",
                  "--k", "1", "--r", "0.5")
    assert code == 4


def test_verify_theorem1_fails_above_radius(capsys):
    code, out = run(capsys, "verify", "--theorem", "1", "--family", "omega_a", "--a", "0.8",
                    "--margin", "-0.01")
    assert code == 1
    assert rows(out)[0]["verdict"] == "FAILS"


def test_verify_theorem2(capsys):
    code, _ = run(capsys, "verify", "--theorem", "2", "--seed", "4")
    assert code == 0


def test_sharpness_extremal_harmonic(capsys):
    code, out = run(capsys, "sharpness", "--out", "json", "--family", "extremal_harmonic",
                    "--a", "0.5", "--k", "1", "--p", "1", "--m", "1")
    assert code == 0
    row = json.loads(out)[0]
    root = rd.lambda_root_a(rd.RadiusParams(1.0, 1.0, 1, 0.5))
    lo, hi = row["crossover_bracket"]
    assert lo - 1e-9 <= root <= hi + 1e-9


def test_sharpness_bad_bracket(capsys):
    code, _ = run(capsys, "sharpness", "--family", "omega_a", "--a", "0.5", "--r-lo", "0.9",
                  "--r-hi", "0.95")
    assert code == 4


def test_table_r4(capsys):
    code, out = run(capsys, "table", "--name", "r4_ordering")
    assert code == 0
    assert "r_4(1/2)" in out


def test_props_lemmas(capsys):
    code, out = run(capsys, "props", "--suite", "lemmas")
    assert code == 0
    assert all(r["passed"] == "True" for r in rows(out))


def test_plotdata(capsys):
    code, out = run(capsys, "plotdata", "--curve", "t_p", "--p", "4", "--points", "5")
    assert code == 0
    assert len(rows(out)) == 5


def test_output_file_and_config(tmp_path, capsys):
    cfg = tmp_path / "bohr.cfg"
    cfg.write_text("# settings\norder = 80\ngrid = 7\n")
    target = tmp_path / "out.csv"
    code = cli.main(["--config", str(cfg), "--output", str(target), "plotdata", "--curve", "r_p"])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert len(target.read_text().strip().splitlines()) == 8


def test_deterministic_output(capsys):
    argv = ["--seed", "7", "verify", "--theorem", "3", "--family", "random_hk", "--k", "0.5",
            "--p", "1"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "bohr_lab.cli", "radius", "--formula", "C_p",
                          "--p", "2"], capture_output=True, text=True, check=True)
    assert float(rows(res.stdout)[0]["radius"]) == pytest.approx((math.sqrt(5) - 1) / 2)
