"""Scalar special functions: Euler's constant, digamma, E1 and Gamma(a, x).

All routines take and return Python floats and are pure functions of their
arguments.
"""

from __future__ import annotations

import math

from .errors import DomainError, NonConvergence

EULER_GAMMA = 0.57721566490153286061

_EPS = 2.220446049250313e-16
_FPMIN = 1e-300
_MAX_ITER = 1000

# B_{2k} / (2k) for k = 1..7, the digamma asymptotic coefficients.
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def euler_gamma() -> float:
    """Return the Euler-Mascheroni constant to double precision."""
    return EULER_GAMMA


def digamma(x: float) -> float:
    """Digamma function psi(x) for x > 0.

    Shifts the argument upward with psi(x) = psi(x + 1) - 1/x until x >= 8,
    then applies the asymptotic expansion
    ``ln x - 1/(2x) - sum B_2k / (2k x^2k)``.
    """
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"digamma requires x > 0 (got {x!r})")
    shift = 0.0
    while x < 8.0:
        shift += 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    # Horner form of sum_k c_k * inv2^k
    poly = 0.0
    for c in reversed(_DIGAMMA_ASYMPTOTIC):
        poly = (poly + c) * inv2
    return math.log(x) - 0.5 / x - poly - shift


def ein(x: float) -> float:
    """Entire exponential integral Ein(x) = sum_{n>=1} (-1)^(n+1) x^n / (n n!).

    The power series is used for x <= 1 (all terms share a sign when x < 0);
    above that the alternating series cancels, so gamma + ln x + E1(x) is
    used instead.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("ein requires a real argument (got nan)")
    if x > 1.0:
        return EULER_GAMMA + math.log(x) + exp_integral_e1(x)
    term = 1.0
    total = 0.0
    n = 0
    while True:
        n += 1
        term *= -x / n
        contrib = -term / n
        total += contrib
        if abs(contrib) <= _EPS * abs(total) * 0.5 or n > _MAX_ITER:
            return total


def _e1_continued_fraction(x: float) -> float:
    # modified Lentz on E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    b = x + 1.0
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER + 1):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) <= _EPS:
            return h * math.exp(-x)
    raise NonConvergence(f"E1 continued fraction failed at x={x!r}", estimate=h * math.exp(-x))


def _e1_series(x: float) -> float:
    return -EULER_GAMMA - math.log(x) + ein(x)


def exp_integral_e1(x: float) -> float:
    """Exponential integral E1(x) = int_x^inf e^-t / t dt for x > 0.

    Power series for x <= 1, continued fraction above.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"exp_integral_e1 requires x > 0 (got {x!r})")
    if math.isinf(x):
        return 0.0
    if x <= 1.0:
        return _e1_series(x)
    return _e1_continued_fraction(x)


def lower_incomplete_gamma(a: float, x: float) -> float:
    """Lower incomplete gamma gamma(a, x) by its power series.

    Requires a > 0 and x >= 0; accurate where x < a + 1 and still convergent
    (more slowly) beyond.
    """
    if not a > 0.0:
        raise DomainError(f"lower_incomplete_gamma requires a > 0 (got {a!r})")
    if x < 0.0:
        raise DomainError(f"lower_incomplete_gamma requires x >= 0 (got {x!r})")
    if x == 0.0:
        return 0.0
    return _lower_series(a, x)


def _lower_series(a: float, x: float) -> float:
    # valid for any a that is not a non-positive integer
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_MAX_ITER * 10):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) <= abs(total) * _EPS:
            return total * math.exp(-x + a * math.log(x))
    raise NonConvergence(f"incomplete gamma series failed at a={a!r}, x={x!r}")


def _upper_continued_fraction(a: float, x: float) -> float:
    b = x + 1.0 - a
    c = 1.0 / _FPMIN
    d = 1.0 / b if b != 0.0 else 1.0 / _FPMIN
    h = d
    for i in range(1, _MAX_ITER * 10 + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= _EPS:
            return math.exp(-x + a * math.log(x)) * h
    raise NonConvergence(f"incomplete gamma continued fraction failed at a={a!r}, x={x!r}")


def upper_incomplete_gamma(a: float, x: float) -> float:
    """Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^-t dt.

    Supported for a in [-5, 5] and x >= 0 (x > 0 when a <= 0, where the
    integral diverges at zero).
    """
    a = float(a)
    x = float(x)
    if not -5.0 <= a <= 5.0:
        raise DomainError(f"upper_incomplete_gamma supports a in [-5, 5] (got {a!r})")
    if not x >= 0.0:
        raise DomainError(f"upper_incomplete_gamma requires x >= 0 (got {x!r})")
    if a <= 0.0 and x == 0.0:
        raise DomainError(f"upper_incomplete_gamma(a, 0) diverges for a <= 0 (got a={a!r})")
    if math.isinf(x):
        return 0.0
    if x == 0.0:
        return math.gamma(a)
    if a > 0.0:
        if x < a + 1.0:
            return math.gamma(a) - _lower_series(a, x)
        return _upper_continued_fraction(a, x)
    if x >= 1.0:
        return _upper_continued_fraction(a, x)
    # a <= 0, 0 < x < 1: recur downward from a fractional start in [0, 1)
    start = a - math.floor(a)
    if start == 0.0:
        value = exp_integral_e1(x)
    else:
        value = math.gamma(start) - _lower_series(start, x)
    s = start
    while s > a + 0.5:
        s -= 1.0
        value = (value - math.exp(-x + s * math.log(x))) / s
    return value
