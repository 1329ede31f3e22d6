from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_umbral.errors import DomainError
from harmonic_umbral.specfun import (
    EULER_GAMMA,
    digamma,
    ein,
    euler_gamma,
    exp_integral_e1,
    lower_incomplete_gamma,
    upper_incomplete_gamma,
)

# frozen from mpmath at 40 digits
DIGAMMA = {
    0.1: -10.423754940411076,
    0.5: -1.9635100260214235,
    1.0: -0.5772156649015329,
    2.5: 0.7031566406452432,
    10.0: 2.251752589066721,
    123.4: 4.8113737751162775,
}
E1 = {
    0.01: 4.037929576538114,
    0.5: 0.5597735947761608,
    1.0: 0.21938393439552029,
    1.5: 0.10001958240663265,
    5.0: 0.0011482955912753257,
    30.0: 3.0215520106888124e-15,
}
UPPER_GAMMA = {
    (0.5, 1.0): 0.27880558528066196,
    (0.5, 0.1): 1.1604624847937441,
    (2.5, 3.0): 0.407069175871303,
    (-0.5, 2.0): 0.030098757100186467,
    (-1.5, 0.3): 2.2387393793796466,
    (0.0, 0.7): 0.3737688432335092,
    (-3.0, 0.2): 31.180903777291984,
    (4.2, 10.0): 0.10066408807007603,
}


def _richardson_gamma() -> float:
    # gamma = lim (H_n - ln n); Richardson on n = 1000, 2000 removes the 1/(2n) term
    def d(n: int) -> float:
        return math.fsum(1.0 / k for k in range(1, n + 1)) - math.log(n)

    return 2.0 * d(2000) - d(1000)


def test_euler_gamma_against_richardson_oracle() -> None:
    assert euler_gamma() == EULER_GAMMA
    assert abs(EULER_GAMMA - _richardson_gamma()) < 1e-7


@pytest.mark.parametrize("x, expected", sorted(DIGAMMA.items()))
def test_digamma_frozen(x: float, expected: float) -> None:
    assert digamma(x) == pytest.approx(expected, rel=1e-14, abs=1e-15)


def test_digamma_half_closed_form() -> None:
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2.0 * math.log(2.0), rel=1e-15)


@given(st.floats(min_value=0.01, max_value=200.0))
def test_digamma_recurrence(x: float) -> None:
    assert digamma(x + 1.0) - digamma(x) == pytest.approx(1.0 / x, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, math.nan])
def test_digamma_poles_rejected(x: float) -> None:
    with pytest.raises(DomainError):
        digamma(x)


@pytest.mark.parametrize("x, expected", sorted(E1.items()))
def test_e1_frozen(x: float, expected: float) -> None:
    assert exp_integral_e1(x) == pytest.approx(expected, rel=1e-13)


def test_e1_rejects_nonpositive() -> None:
    with pytest.raises(DomainError):
        exp_integral_e1(0.0)


@given(st.floats(min_value=1e-3, max_value=40.0))
def test_ein_matches_e1_relation(x: float) -> None:
    assert ein(x) == pytest.approx(EULER_GAMMA + math.log(x) + exp_integral_e1(x), rel=1e-12, abs=1e-13)


def test_ein_is_entire_and_odd_leading_term() -> None:
    assert ein(0.0) == 0.0
    assert ein(-1e-8) == pytest.approx(-1e-8, rel=1e-7)


@pytest.mark.parametrize("ax, expected", sorted(UPPER_GAMMA.items()))
def test_upper_gamma_frozen(ax: tuple[float, float], expected: float) -> None:
    assert upper_incomplete_gamma(*ax) == pytest.approx(expected, rel=1e-12)


def test_upper_gamma_half_one_is_sqrt_pi_erfc() -> None:
    assert upper_incomplete_gamma(0.5, 1.0) == pytest.approx(math.sqrt(math.pi) * math.erfc(1.0), rel=1e-14)


@settings(max_examples=60)
@given(st.floats(min_value=0.1, max_value=5.0), st.floats(min_value=0.01, max_value=30.0))
def test_lower_plus_upper_is_gamma(a: float, x: float) -> None:
    total = lower_incomplete_gamma(a, x) + upper_incomplete_gamma(a, x)
    assert total == pytest.approx(math.gamma(a), rel=1e-12)


@settings(max_examples=60)
@given(st.integers(min_value=-40, max_value=40).map(lambda k: k / 10), st.floats(min_value=0.05, max_value=20.0))
def test_upper_gamma_recurrence(a: float, x: float) -> None:
    # Gamma(a + 1, x) = a Gamma(a, x) + x^a e^-x
    lhs = upper_incomplete_gamma(a + 1.0, x)
    rhs = a * upper_incomplete_gamma(a, x) + x**a * math.exp(-x)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-14)
