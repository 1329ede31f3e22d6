"""Acceptance criteria, one test per criterion.

Each test measures the quantity at the stated tolerance and wall-clock
budget and records a single PASS/FAIL line, printed at the end of the run.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from typing import Callable, Sequence, TypeVar

import pytest

from harmonic_umbral import harness
from harmonic_umbral.harness import CheckReport
from harmonic_umbral.umbral import hbef, hbef_closed

from .conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance

T = TypeVar("T")


def timed(fn: Callable[[], T]) -> tuple[T, float]:
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def judge(number: int, title: str, reports: Sequence[CheckReport], bounds: dict[str, float], elapsed: float, budget: float) -> None:
    by_id = {r.id: r for r in reports}
    parts = []
    ok = elapsed < budget
    for check_id, bound in bounds.items():
        r = by_id[check_id]
        good = r.passed and r.max_abs_error <= bound
        ok = ok and good
        parts.append(f"{check_id} {r.max_abs_error:.2e} <= {bound:.0e}")
    parts.append(f"{elapsed:.2f}s < {budget:g}s")
    record(number, title, ok, "; ".join(parts))


def test_criterion_01_gosper_equivalence() -> None:
    grid = (0.1, 0.25, 0.5, 1.0, 2.0, 5.0)

    def run() -> float:
        return max(abs(hbef(x).value - hbef_closed(x)) / abs(hbef_closed(x)) for x in grid)

    worst, elapsed = timed(run)
    ok = worst <= 1e-10 and elapsed < 1.0
    record(1, "Gosper closed form vs HBEF series", ok, f"max relative difference {worst:.2e} <= 1e-10; {elapsed:.2f}s < 1s")


def test_criterion_02_ode_residual() -> None:
    (_, ode), elapsed = timed(lambda: harness.check_ode_and_gosper((0.1, 0.25, 0.5, 1.0, 2.0, 5.0)))
    judge(2, "HBEF first-order ODE residual", [ode], {"ode": 1e-9}, elapsed, 1.0)


def test_criterion_03_exponential_weight() -> None:
    grid = (-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9)
    report, elapsed = timed(lambda: harness.check_exponential_integral(grid))
    judge(3, "exponential-weight integral, dual route", [report], {"exp-weight": 1e-8}, elapsed, 5.0)


def test_criterion_04_gaussian_identities() -> None:
    def run() -> list[CheckReport]:
        return [
            harness.check_gaussian_linear(),
            harness.check_gaussian_quadratic(),
            harness.check_binomial_form(),
            harness.check_sqrt_gaussian(),
        ]

    reports, elapsed = timed(run)
    bounds = {"gaussian-linear": 1e-8, "gaussian-quadratic": 1e-8, "binomial-form": 1e-8, "sqrt-gaussian": 1e-7}
    binomial = next(r for r in reports if r.id == "binomial-form")
    assert "matching reading:" in binomial.notes
    judge(4, "Gaussian identities incl. reading report", reports, bounds, elapsed, 30.0)


def test_criterion_05_laplace_ansatz() -> None:
    report, elapsed = timed(lambda: harness.check_laplace_ansatz((0.25, 0.5, 1.0, 2.0)))
    judge(5, "Laplace ansatz", [report], {"laplace-ansatz": 1e-6}, elapsed, 30.0)


def test_criterion_06_exact_polynomial_suite() -> None:
    reports, elapsed = timed(harness.check_polynomial_suite)
    exact = ("appell-derivative", "hermite-derivative", "h-minus-one", "binomial-shift", "hermite-recurrence", "hermite-ode")
    by_id = {r.id: r for r in reports}
    ok = elapsed < 5.0 and all(by_id[i].max_abs_error == 0.0 and by_id[i].passed for i in exact)
    record(6, "exact polynomial suite", ok, f"{len(exact)} exact checks at zero tolerance; {elapsed:.2f}s < 5s")


def test_criterion_07_generating_functions() -> None:
    reports, elapsed = timed(harness.check_polynomial_suite)
    genfun = [r for r in reports if r.id in ("genfun-harmonic", "genfun-hermite")]
    assert harness.GENFUN_TERMS == 60 and set(harness.GENFUN_GRID) == {-0.5, 0.0, 0.5, 1.0}
    # the timed call also runs the exact checks, so the 2 s budget is conservative
    judge(7, "generating functions, N = 60", genfun, {"genfun-harmonic": 1e-9, "genfun-hermite": 1e-9}, elapsed, 2.0)


def test_criterion_08_truncated_exponentials() -> None:
    reports, elapsed = timed(harness.check_truncated_exponential)
    bounds = {"trunc-exp-integer": 1e-10, "trunc-exp-half": 1e-9, "trunc-exp-gaussian": 1e-8}
    judge(8, "truncated exponentials", reports, bounds, elapsed, 10.0)


def test_criterion_09_harmonic_routes() -> None:
    report, elapsed = timed(lambda: harness.check_harmonic_routes((-0.5, -0.1, 0.5, 1.5, 2.5, 7.5)))
    judge(9, "generalized harmonic numbers, digamma vs quadrature", [report], {"harmonic-routes": 1e-9}, elapsed, 5.0)


def _cli(*argv: str) -> subprocess.CompletedProcess[str]:
    return subprocess.run(
        [sys.executable, "-m", "harmonic_umbral", *argv],
        capture_output=True,
        text=True,
        encoding="utf-8",
        check=False,
    )


def test_criterion_10_cli_contract() -> None:
    verify = _cli("verify", "--format", "json")
    data = json.loads(verify.stdout)
    misuse = {
        2: _cli("eval", "no-such-target", "--x", "1").returncode,
        3: _cli("eval", "harmonic-real", "--nu", "-2").returncode,
        4: _cli("verify", "--id", "no-such-check").returncode,
    }
    ok = (
        verify.returncode == 0
        and isinstance(data, list)
        and len(data) == len(harness.CHECK_IDS)
        and all(item["passed"] for item in data)
        and all(code == got for code, got in misuse.items())
    )
    record(10, "CLI contract", ok, f"verify exit {verify.returncode}, {len(data)} reports; misuse exits {sorted(misuse.values())}")
