from __future__ import annotations

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from harmonic_umbral.errors import DomainError, NonConvergence
from harmonic_umbral.quadrature import (
    QuadConfig,
    integrate_finite,
    integrate_oscillatory_tail,
    integrate_real_line,
    integrate_semi_infinite,
    wynn_epsilon,
)


def test_polynomial_exact_on_one_panel() -> None:
    res = integrate_finite(lambda x: x**20, 0.0, 1.0)
    assert res.value == pytest.approx(1.0 / 21.0, rel=1e-14)
    assert res.subdivisions >= 1


def test_endpoint_singularity() -> None:
    res = integrate_finite(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
    assert res.value == pytest.approx(2.0, abs=1e-9)


def test_semi_infinite_exponential_and_algebraic_tail() -> None:
    assert integrate_semi_infinite(lambda x: math.exp(-x), 0.0).value == pytest.approx(1.0, abs=1e-12)
    assert integrate_semi_infinite(lambda x: 1.0 / (1.0 + x * x), 0.0).value == pytest.approx(math.pi / 2, abs=1e-9)


def test_real_line_gaussian() -> None:
    res = integrate_real_line(lambda x: math.exp(-x * x))
    assert res.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 0.0)])
def test_degenerate_or_reversed_interval_rejected(a: float, b: float) -> None:
    with pytest.raises(DomainError):
        integrate_finite(math.sin, a, b)


def test_harmonic_integrand_gives_h4() -> None:
    res = integrate_finite(lambda x: (1.0 - x**4) / (1.0 - x), 0.0, 1.0)
    assert res.value == pytest.approx(25.0 / 12.0, abs=1e-12)


def test_subdivision_cap_raises() -> None:
    cfg = QuadConfig(tol=1e-14, max_subdivisions=3)
    with pytest.raises(NonConvergence):
        integrate_finite(lambda x: math.sin(1.0 / x), 1e-3, 1.0, cfg)


def test_config_validation() -> None:
    with pytest.raises(ValueError):
        QuadConfig(tol=0.0)
    with pytest.raises(ValueError):
        QuadConfig(max_subdivisions=0)


@settings(max_examples=40)
@given(
    st.floats(min_value=-3.0, max_value=3.0),
    st.floats(min_value=-3.0, max_value=3.0),
    st.floats(min_value=-3.0, max_value=3.0),
    st.floats(min_value=-2.0, max_value=2.0),
)
def test_linearity_and_additivity(a: float, b: float, c: float, m: float) -> None:
    f = math.cos
    g = lambda x: x * x
    lo, hi = min(a, b), max(a, b)
    assume(hi - lo > 1e-6 and lo + 1e-6 < c < hi - 1e-6)
    whole = integrate_finite(lambda x: f(x) + m * g(x), lo, hi).value
    parts = integrate_finite(f, lo, hi).value + m * integrate_finite(g, lo, hi).value
    assert whole == pytest.approx(parts, abs=1e-10)
    split = integrate_finite(f, lo, c).value + integrate_finite(f, c, hi).value
    assert split == pytest.approx(integrate_finite(f, lo, hi).value, abs=1e-10)


def test_wynn_accelerates_alternating_series() -> None:
    sums, acc = [], 0.0
    for k in range(20):
        acc += (-1) ** k / (k + 1)
        sums.append(acc)
    limit, _ = wynn_epsilon(sums)
    assert limit == pytest.approx(math.log(2.0), abs=1e-10)


def test_oscillatory_tail_sin_over_x() -> None:
    # int_pi^inf sin x / x dx = pi/2 - Si(pi), pieces aligned with sign changes
    si_pi = 1.851937051982466
    res = integrate_oscillatory_tail(lambda x: math.sin(x) / x, math.pi, math.pi)
    assert res.value == pytest.approx(math.pi / 2 - si_pi, abs=5e-10)
