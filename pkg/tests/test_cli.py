"""Command-line interface: argument parsing, output formats, exit codes."""

import csv
import io
import json
import math
from fractions import Fraction

import pytest

from lerchkit.cli import _parse_grid, main, parse_number
from lerchkit.eval_core import phi


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# number and grid parsing
# ---------------------------------------------------------------------------

def test_parse_number_types():
    assert parse_number("3") == (3, True)
    assert parse_number("-7/4") == (Fraction(-7, 4), True)
    assert parse_number("2.5") == (2.5, False)
    assert parse_number("1+2i") == (1 + 2j, False)
    assert parse_number("0.5j") == (0.5j, False)
    with pytest.raises(ValueError):
        parse_number("zebra")


def test_parse_grid_exact():
    var, vals = _parse_grid("z=-9/10:9/10:19")
    assert var == "z"
    assert len(vals) == 19
    assert vals[0] == Fraction(-9, 10) and vals[-1] == Fraction(9, 10)
    assert vals[9] == 0 and isinstance(vals[9], int)  # exact grid hits 0


def test_parse_grid_float_and_edge_counts():
    _, vals = _parse_grid("s=0.5:2.5:5")
    assert vals == pytest.approx([0.5, 1.0, 1.5, 2.0, 2.5])
    assert _parse_grid("s=1:9:1") == ("s", [1])
    assert _parse_grid("s=1:9:0") == ("s", [])
    for bad in ("s=1:2", "1:2:3", "s=1:2:x", "s=1:2:-1"):
        with pytest.raises(ValueError):
            _parse_grid(bad)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def test_eval_text_output(capsys):
    code, out, _ = run(capsys, "eval", "--s", "2", "--z", "1/2", "--c", "1")
    assert code == 0
    val = float(out.splitlines()[0].split("=")[1])
    want = math.pi ** 2 / 6.0 - math.log(2.0) ** 2  # 2 Li_2(1/2)
    assert val == pytest.approx(want, rel=1e-9)
    assert "method" in out and "stratum" in out


def test_eval_json_output(capsys):
    code, out, _ = run(capsys, "eval", "--s", "2", "--z", "1/2", "--c", "1",
                       "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "lerch-kit/1"
    ref = phi(2, Fraction(1, 2), 1).value
    assert complex(*doc["value"]) == pytest.approx(ref, rel=1e-12)
    assert doc["approximate_input"] is False


def test_eval_exact_rational(capsys):
    code, out, _ = run(capsys, "eval", "--s", "0", "--z", "2/3", "--c", "1")
    assert code == 0
    assert "3 (exact rational)" in out


def test_eval_notes_approximate_input(capsys):
    _, out, _ = run(capsys, "eval", "--s", "2", "--z", "0.5", "--c", "1")
    assert "approximate input" in out


def test_eval_exit_codes(capsys):
    code, _, err = run(capsys, "eval", "--s", "2", "--z", "1", "--c", "1")
    assert code == 2 and "error" in err          # z = 1 stratum
    code, _, err = run(capsys, "eval", "--s", "1/2", "--z", "2", "--c", "1")
    assert code == 4                             # on the cut [1, inf)
    code, _, err = run(capsys, "eval", "--s", "x", "--z", "1/2", "--c", "1")
    assert code == 1                             # unparseable number


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--s", "2", "--z", "1/2"])  # missing --c
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1


# ---------------------------------------------------------------------------
# monodromy
# ---------------------------------------------------------------------------

def test_monodromy_ledger(capsys):
    code, out, _ = run(capsys, "monodromy", "--word", "Z1",
                       "--s", "1/2", "--z", "-1", "--c", "1/2", "--json")
    assert code == 0
    doc = json.loads(out)
    got = complex(*doc["monodromy"])
    assert got == pytest.approx(-math.sqrt(2) + math.sqrt(2) * 1j, abs=1e-12)
    assert complex(*doc["value"]) == pytest.approx(
        complex(*doc["base"]) + got, abs=1e-12)
    assert doc["contributions"]


def test_monodromy_empty_word(capsys):
    code, out, _ = run(capsys, "monodromy", "--word", "",
                       "--s", "1/2", "--z", "-1", "--c", "1/2")
    assert code == 0
    assert "monodromy total = 0" in out


def test_monodromy_bad_word(capsys):
    code, _, err = run(capsys, "monodromy", "--word", "Q3",
                       "--s", "1/2", "--z", "-1", "--c", "1/2")
    assert code == 1 and "error" in err


# ---------------------------------------------------------------------------
# special / ode
# ---------------------------------------------------------------------------

def test_special_table(capsys):
    code, out, _ = run(capsys, "special", "--m", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["r"] == [0, 1, 11, 11, 1]


def test_special_point_value(capsys):
    code, out, _ = run(capsys, "special", "--m", "1",
                       "--z", "2", "--c", "0")
    assert code == 0
    assert "= 4" in out
    code, _, err = run(capsys, "special", "--m", "1", "--z", "2")
    assert code == 1  # --z needs --c


def test_ode_identity_matrix(capsys):
    code, out, _ = run(capsys, "ode", "--m", "1", "--c", "1", "--matrices",
                       "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["basis_kind"] == "regular"
    assert doc["rho_Z0"] == [[[1.0, 0.0], [0.0, 0.0]],
                             [[0.0, 0.0], [1.0, 0.0]]]


def test_ode_coeffs_and_class(capsys):
    code, out, _ = run(capsys, "ode", "--m", "1", "--c", "1/2",
                       "--coeffs", "--class", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["class"] == "quasi-unipotent"
    rows = {r["k"]: r for r in doc["coeffs"]}
    assert rows[2]["alpha"] == [-1] and rows[2]["beta"] == [1]


def test_ode_text_output(capsys):
    code, out, _ = run(capsys, "ode", "--m", "1", "--c", "1", "--matrices")
    assert code == 0
    assert "rho(Z0) =" in out and "rho(Z1) =" in out
    assert "-0" not in out  # formatting never shows negative zero


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "spence")
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out
    assert "suite spence:" in out


def test_verify_failure_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ladders",
                       "--tol", "1e-30")
    assert code == 1
    assert "[FAIL]" in out


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 1


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_csv_stdout(capsys):
    code, out, _ = run(capsys, "sweep", "--expr", "phi",
                       "--grid", "z=0.1:0.5:5", "--s", "2", "--c", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    for row in rows:
        z = float(row["z_re"])
        want = phi(2, z, 1).value
        assert float(row["value_re"]) == pytest.approx(want.real, rel=1e-9)
        assert row["error"] == ""


def test_sweep_exact_grid_flags_bad_rows(capsys):
    # the exact grid passes through z = 0, which has no assigned value
    code, out, _ = run(capsys, "sweep", "--expr", "phi",
                       "--grid", "z=-1/2:1/2:3", "--s", "2", "--c", "1")
    assert code == 0  # other rows succeeded
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3
    errs = [r["error"] for r in rows]
    assert errs[0] == "" and errs[2] == ""
    assert "StratumError" in errs[1]


def test_sweep_all_rows_failing_returns_domain_code(capsys):
    code, out, _ = run(capsys, "sweep", "--expr", "phi",
                       "--grid", "z=2:3:2", "--s", "1/2", "--c", "1")
    assert code == 4  # both rows sit on the branch cut


def test_sweep_empty_grid_warns(capsys):
    code, out, err = run(capsys, "sweep", "--expr", "phi",
                         "--grid", "z=0:1:0", "--s", "2", "--c", "1")
    assert code == 0
    assert "empty grid" in err
    assert len(out.strip().splitlines()) == 1  # header only


def test_sweep_json_file(tmp_path, capsys):
    target = tmp_path / "rows.json"
    code, _, _ = run(capsys, "sweep", "--expr", "periodic_zeta",
                     "--grid", "s=-3:-1:3", "--a", "1/3",
                     "--out", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["schema"] == "lerch-kit/1"
    assert doc["var"] == "s" and len(doc["rows"]) == 3
    assert all(r["error"] == "" for r in doc["rows"])


def test_sweep_csv_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, _, _ = run(capsys, "sweep", "--expr", "li_star",
                     "--grid", "z=-0.8:0.8:5", "--m", "2", "--k", "1",
                     "--out", str(target))
    assert code == 0
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == 5 and rows[0]["m"] == "2"


def test_sweep_checks_grid_variable(capsys):
    code, _, err = run(capsys, "sweep", "--expr", "phi",
                       "--grid", "a=0:1:3", "--s", "2", "--c", "1")
    assert code == 1 and "not a parameter" in err
    code, _, err = run(capsys, "sweep", "--expr", "phi",
                       "--grid", "z=0.1:0.5:3", "--s", "2")
    assert code == 1 and "missing --c" in err


# ---------------------------------------------------------------------------
# tolerance plumbing
# ---------------------------------------------------------------------------

def test_env_tolerance_is_honored(capsys, monkeypatch):
    monkeypatch.setenv("LERCH_KIT_TOL", "1e-6")
    code, out, _ = run(capsys, "eval", "--s", "2", "--z", "0.85", "--c",
                       "0.6", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["error_estimate"] <= 1e-6
    ref = phi(2, 0.85, 0.6).value
    assert complex(*doc["value"]) == pytest.approx(ref, rel=1e-5)


def test_tol_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("LERCH_KIT_TOL", "1e-2")
    code, out, _ = run(capsys, "eval", "--s", "2", "--z", "0.85",
                       "--c", "0.6", "--tol", "1e-13", "--json")
    assert code == 0
    assert json.loads(out)["error_estimate"] <= 1e-12
