import io
import json
import math

import numpy as np
import pytest
from scipy.integrate import trapezoid

from dhydrogen.cli import EXIT_EMPTY, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, main, parse_range, read_csv, write_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _csv(text):
    return read_csv(io.StringIO(text))


def test_report_ground_state_json(capsys):
    code, out, _ = run(capsys, "report", "-n", "1", "-l", "0", "-d", "3", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["units"] == {"hbar": 1, "mu": 1, "a0": 1, "Z": 1.0}
    assert data["state"] == {"n": 1, "l": 0, "d": 3}
    assert abs(data["observables"]["product"] - math.sqrt(3) / 2) <= 1e-12


def test_report_table_has_units_line(capsys):
    code, out, _ = run(capsys, "report", "-n", "2", "-l", "1", "-d", "3")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "# units: hbar=1 mu=1 a0=1 Z=1"
    assert "delta_pr" in out


def test_report_2d_s_state_undefined(capsys):
    code, out, _ = run(capsys, "report", "-n", "1", "-l", "0", "-d", "2", "--format", "csv")
    assert code == EXIT_OK
    _, header, rows = _csv(out)
    values = dict(rows)
    assert values["product"] == "undefined(d=2,l=0)"
    assert values["expect_r"] == 0.5


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "-n", "0", "-l", "0", "-d", "3"],
        ["report", "-n", "2", "-l", "2", "-d", "3"],
        ["report", "-n", "1", "-l", "0", "-d", "1"],
        ["report", "-n", "1", "-l", "0", "-d", "3", "--precision", "3"],
        ["report", "-n", "1", "-l", "0", "-d", "3", "-Z", "-1"],
        ["report", "-n", "1"],
        ["sweep", "--observables", "nonsense"],
        ["sweep", "--range", "5..2"],
        ["wavefunction", "-n", "1", "-l", "0", "-d", "3", "--rmax", "-2"],
        ["nosuchcommand"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_help_exits_zero(capsys):
    assert main(["--help"]) == EXIT_OK


def test_parse_range():
    assert parse_range("2..20") == (2, 20)


def test_csv_round_trip_is_byte_identical(capsys):
    code, out, _ = run(capsys, "sweep", "--vary", "d", "--range", "1..8", "--observables", "expect_r,product,delta_pr")
    assert code == EXIT_OK
    Z, header, rows = _csv(out)
    buf = io.StringIO()
    write_csv(buf, Z, header, rows, 12)
    assert buf.getvalue() == out


def test_sweep_reports_skipped_states(capsys):
    code, out, _ = run(capsys, "sweep", "--vary", "d", "--range", "1..3", "-n", "1", "-l", "0")
    assert code == EXIT_OK
    _, _, rows = _csv(out)
    assert rows[0][5].startswith("skipped:")
    assert [r[2] for r in rows] == [1, 2, 3]


def test_sweep_mean_radius_monotone_in_d(capsys):
    code, out, _ = run(capsys, "sweep", "--vary", "d", "--range", "2..20")
    assert code == EXIT_OK
    _, header, rows = _csv(out)
    assert header == ["n", "l", "d", "observable", "value", "note"]
    by_pair = {}
    for n, l, d, name, value, note in rows:
        by_pair.setdefault((n, l), []).append(value)
    assert set(by_pair) == {(1, 0), (2, 0), (2, 1), (3, 0)}
    for values in by_pair.values():
        assert len(values) == 19
        assert all(b > a for a, b in zip(values, values[1:]))


def test_sweep_heisenberg_over_n(capsys):
    code, out, _ = run(capsys, "sweep", "--vary", "n", "--range", "1..8", "-d", "5", "--observables", "product")
    assert code == EXIT_OK
    _, _, rows = _csv(out)
    assert len(rows) == 8
    assert all(r[4] > 0.5 for r in rows)


def test_sweep_with_no_valid_state(capsys):
    code, _, err = run(capsys, "sweep", "--vary", "d", "--range", "2..4", "-n", "1", "-l", "3")
    assert code == EXIT_EMPTY
    assert "no valid state" in err


def test_sweep_to_file(tmp_path, capsys):
    target = tmp_path / "sweep.json"
    code, out, _ = run(capsys, "sweep", "--format", "json", "--out", str(target), "--range", "2..4", "-n", "2", "-l", "1")
    assert code == EXIT_OK
    assert out == ""
    data = json.loads(target.read_text())
    assert data["columns"][:3] == ["n", "l", "d"]
    assert len(data["rows"]) == 3


def test_wavefunction_table(capsys):
    code, out, _ = run(capsys, "wavefunction", "-n", "1", "-l", "0", "-d", "3", "--points", "101")
    assert code == EXIT_OK
    _, header, rows = _csv(out)
    assert header == ["r", "R", "P"]
    assert len(rows) == 101
    assert rows[0] == [0.0, 2.0, 0.0]
    assert rows[-1][0] == pytest.approx(15.0)  # 10 <r>


@pytest.mark.parametrize("n, l, d", [(1, 0, 3), (3, 1, 4), (4, 0, 2), (3, 2, 7)])
def test_wavefunction_normalised_and_nodes(capsys, n, l, d):
    from dhydrogen.hydrogen import QuantumState
    from dhydrogen.observables import expect_r

    rmax = 40 * expect_r(QuantumState(n, l, d))
    code, out, _ = run(capsys, "wavefunction", "-n", str(n), "-l", str(l), "-d", str(d),
                       "--rmax", repr(rmax), "--points", "20001", "--precision", "17")
    assert code == EXIT_OK
    _, _, rows = _csv(out)
    r, R, P = np.array(rows).T
    assert trapezoid(P, r) == pytest.approx(1.0, abs=1e-4)
    signs = np.sign(R[1:])
    signs = signs[signs != 0]
    assert np.count_nonzero(signs[1:] != signs[:-1]) == n - l - 1


def test_validate_default_passes(capsys):
    code, out, err = run(capsys, "validate", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["summary"]["failed"] == 0
    assert "0 failed" in err


def test_validate_impossible_tolerance_fails(capsys):
    code, _, err = run(capsys, "validate", "--nmax", "2", "--range", "3..4", "--tolerance", "1e-30")
    assert code == EXIT_VALIDATION
    assert "failed" in err


def test_validate_bad_tolerance(capsys):
    code, _, _ = run(capsys, "validate", "--tolerance", "0")
    assert code == EXIT_USAGE


def test_z_scales_lengths(capsys):
    code, out, _ = run(capsys, "report", "-n", "1", "-l", "0", "-d", "3", "-Z", "2", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["observables"]["expect_r"] == pytest.approx(0.75)
    assert data["observables"]["energy"] == pytest.approx(-2.0)
