from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

import pytest

from harmonic_umbral.cli import format_fraction_decimal, format_real, main


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_format_real_rounding() -> None:
    assert format_real(0.6137056388801094) == "0.613705638880109"
    assert format_real(1.0) == "1"
    assert format_real(325.69858745161633) == "325.698587451616"
    assert format_real(3.0215520106888124e-15) == "3.02155201068881e-15"
    assert format_real(-2.5) == "-2.5"


def test_format_half_even() -> None:
    # 16th significant digit is exactly 5 -> round to even
    assert format_fraction_decimal(Fraction(1234567890123425, 10**15)) == "1.23456789012342"
    assert format_fraction_decimal(Fraction(1234567890123435, 10**15)) == "1.23456789012344"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("eval", "harmonic", "--n", "4"), "25/12 ≈ 2.08333333333333"),
        (("eval", "hbef", "--x", "0"), "1"),
        (("eval", "harmonic-real", "--nu", "0.5"), "0.613705638880109"),
        (("eval", "h-poly", "--n", "2"), "x^2 + 2*x + 3/2"),
        (("eval", "alpha-poly", "--n", "4"), "6*x^2 + 4"),
        (("eval", "e-trunc", "--n", "3"), "8/3 ≈ 2.66666666666667"),
        (("eval", "h-minus-one", "--n", "3"), "-2/3 ≈ -0.666666666666667"),
        (("eval", "hermite2", "--n", "3", "--x", "2", "--y", "1"), "20"),
        (("eval", "gamma-upper", "--a", "2.5", "--x", "3"), "0.407069175871303"),
        (("eval", "e1", "--x", "0.5"), "0.559773594776161"),
    ],
)
def test_eval_text(capsys: pytest.CaptureFixture[str], argv: tuple[str, ...], expected: str) -> None:
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_eval_json(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "eval", "harmonic", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["exact"] == "137/60"
    assert data["value"] == pytest.approx(137 / 60)


def test_table_harmonic_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "table", "harmonic", "--from", "1", "--to", "5", "--step", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["x", "value"]
    assert [r[1] for r in rows[1:]] == ["1", "3/2", "11/6", "25/12", "137/60"]
    assert "\r" not in out


def test_table_hpoly_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "table", "h-poly", "--n", "2", "--from", "-1", "--to", "1", "--step", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["x,value", "-1,0.5", "0,1.5", "1,4.5"]


def test_table_hbef_rows(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "table", "hbef", "--from", "0", "--to", "1", "--step", "0.5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [row["x"] for row in data] == [0.0, 0.5, 1.0]


def test_table_decimal_range_is_exact(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "table", "g-half", "--from", "0.1", "--to", "0.3", "--step", "0.1", "--format", "csv")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["0.1", "0.2", "0.3"]


def test_verify_json_array(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "verify", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert isinstance(data, list) and all(item["passed"] for item in data)
    assert set(data[0]) == {"id", "identity", "max_abs_error", "worst_point", "tolerance", "passed", "notes"}
    # round trip is idempotent
    once = json.dumps(data, indent=2)
    assert json.dumps(json.loads(once), indent=2) == once


def test_verify_single(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "verify", "--id", "gosper", "--format", "json")
    assert code == 0 and [r["id"] for r in json.loads(out)] == ["gosper"]


def test_verify_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "verify", "--id", "ode", "--id", "hermite-ode", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["id"] for r in rows] == ["ode", "hermite-ode"]


@pytest.mark.parametrize(
    "argv, code, fragment",
    [
        (("eval", "no-such-target", "--x", "1"), 2, "unknown target"),
        (("table", "no-such-target", "--from", "0", "--to", "1", "--step", "1"), 2, "unknown target"),
        (("eval", "hbef"), 2, "requires --x"),
        (("table", "hbef", "--from", "1", "--to", "0", "--step", "1"), 2, "--to"),
        (("eval", "harmonic-real", "--nu", "-2"), 3, "nu > -1"),
        (("eval", "harmonic", "--n", "2.5"), 3, "integer"),
        (("eval", "hbef-closed", "--x", "-1"), 3, "x > 0"),
        (("eval", "reciprocal", "--alpha", "1.5"), 3, "|alpha| <="),
        (("verify", "--id", "bogus"), 4, "bogus"),
    ],
)
def test_exit_codes(capsys: pytest.CaptureFixture[str], argv: tuple[str, ...], code: int, fragment: str) -> None:
    got, out, err = run(capsys, *argv)
    assert got == code
    assert fragment in err
    assert out == ""


def test_bad_flag_is_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["eval", "hbef", "--x", "abc"])
    assert exc.value.code == 2


def test_out_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    target = tmp_path / "value.txt"
    code, out, _ = run(capsys, "eval", "harmonic", "--n", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8") == "11/6 ≈ 1.83333333333333\n"


def test_env_default_tolerance(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("UMBRAL_DEFAULT_TOL", "1e-4")
    code, out, _ = run(capsys, "eval", "e-trunc-real", "--alpha", "-0.5")
    assert code == 0
    assert abs(Decimal(out.strip()) - Decimal("0.427583576155807")) < Decimal("1e-4")
    monkeypatch.setenv("UMBRAL_DEFAULT_TOL", "loose")
    code, _, err = run(capsys, "eval", "e-trunc-real", "--alpha", "-0.5")
    assert code == 2 and "UMBRAL_DEFAULT_TOL" in err


def test_constants(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "constants", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["euler_gamma"] == pytest.approx(0.5772156649015329)


def test_module_entry_point() -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "harmonic_umbral", "eval", "harmonic", "--n", "4"],
        capture_output=True,
        text=True,
        encoding="utf-8",
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "25/12 ≈ 2.08333333333333\n"
