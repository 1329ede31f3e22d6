"""Harmonic numbers and truncated-exponential numbers.

Integer-indexed values are exact :class:`fractions.Fraction` objects.  Real
indices go through digamma (harmonic numbers) or a Gamma-weighted integral
(truncated exponentials).

Two zero-index conventions coexist on purpose.  :func:`harmonic_exact`
returns the empty sum h_0 = 0.  :func:`harmonic_umbral` returns 1 at n = 0
and is the coefficient map used by the umbral series: the constant term of
``exp(h x)`` is 1, so the zeroth power of the umbral symbol must map to 1.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .quadrature import QuadConfig, integrate_finite, integrate_semi_infinite
from .specfun import EULER_GAMMA, digamma

_lock = threading.Lock()
_harmonic_table: list[Fraction] = [Fraction(0)]
_trunc_exp_table: list[Fraction] = [Fraction(1)]
_factorial_inv: list[Fraction] = [Fraction(1)]


class Route(enum.Enum):
    EXACT_SUM = "exact-sum"
    DIGAMMA = "digamma"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class HarmonicValue:
    index: float
    value: float
    route: Route


def _check_index(n: int, name: str) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        if isinstance(n, float) and n.is_integer():
            n = int(n)
        else:
            raise DomainError(f"{name} requires a non-negative integer (got {n!r})")
    if n < 0:
        raise DomainError(f"{name} requires n >= 0 (got {n})")
    return n


def harmonic_exact(n: int) -> Fraction:
    """Exact h_n = sum_{r=1}^n 1/r, with h_0 = 0."""
    n = _check_index(n, "harmonic_exact")
    with _lock:
        table = _harmonic_table
        while len(table) <= n:
            table.append(table[-1] + Fraction(1, len(table)))
        return table[n]


def harmonic_umbral(n: int) -> Fraction:
    """Umbral image of h^n: 1 at n = 0, otherwise :func:`harmonic_exact`."""
    n = _check_index(n, "harmonic_umbral")
    return Fraction(1) if n == 0 else harmonic_exact(n)


@lru_cache(maxsize=None)
def _harmonic_floats(count: int) -> tuple[float, ...]:
    # umbral convention; cumulative float sum is accurate to a few ulps
    values = [1.0]
    acc = 0.0
    for k in range(1, count):
        acc += 1.0 / k
        values.append(acc)
    return tuple(values)


def harmonic_umbral_floats(count: int) -> tuple[float, ...]:
    """First ``count`` umbral harmonic numbers as floats (index 0 gives 1.0)."""
    size = 64
    while size < count:
        size *= 2
    return _harmonic_floats(size)[:count]


def _harmonic_integrand(nu: float):
    def integrand(x: float) -> float:
        # (1 - x^nu) / (1 - x) without cancellation near x = 1
        return -math.expm1(nu * math.log(x)) / (1.0 - x)

    return integrand


def harmonic_quadrature(nu: float, cfg: QuadConfig | None = None) -> float:
    """h_nu = int_0^1 (1 - x^nu) / (1 - x) dx, evaluated numerically."""
    nu = float(nu)
    if not nu > -1.0:
        raise DomainError(f"harmonic_quadrature requires nu > -1 (got {nu!r})")
    if nu == 0.0:
        return 0.0
    return integrate_finite(_harmonic_integrand(nu), 0.0, 1.0, cfg).value


def harmonic_real(nu: float, route: Route | str = Route.DIGAMMA, cfg: QuadConfig | None = None) -> HarmonicValue:
    """Harmonic number of real index nu > -1.

    The default digamma route computes psi(nu + 1) + gamma.  The quadrature
    route integrates (1 - x^nu)/(1 - x) over [0, 1]; the exact-sum route is
    available for integer nu only.
    """
    route = Route(route)
    nu = float(nu)
    if not nu > -1.0 or not math.isfinite(nu):
        raise DomainError(f"harmonic_real requires nu > -1 (got {nu!r})")
    if route is Route.DIGAMMA:
        value = 0.0 if nu == 0.0 else digamma(nu + 1.0) + EULER_GAMMA
    elif route is Route.QUADRATURE:
        value = harmonic_quadrature(nu, cfg)
    else:
        if not nu.is_integer():
            raise DomainError(f"exact-sum route needs an integer index (got {nu!r})")
        value = float(harmonic_exact(int(nu)))
    return HarmonicValue(nu, value, route)


def truncated_exp_exact(n: int) -> Fraction:
    """Exact e_n = sum_{r=0}^n 1/r!."""
    n = _check_index(n, "truncated_exp_exact")
    with _lock:
        while len(_factorial_inv) <= n:
            _factorial_inv.append(_factorial_inv[-1] / len(_factorial_inv))
        while len(_trunc_exp_table) <= n:
            _trunc_exp_table.append(_trunc_exp_table[-1] + _factorial_inv[len(_trunc_exp_table)])
        return _trunc_exp_table[n]


def truncated_exp_real(alpha: float, cfg: QuadConfig | None = None) -> float:
    """e_alpha = (1 / Gamma(alpha + 1)) int_0^inf e^-s (1 + s)^alpha ds, alpha > -1.

    The Gamma normalization is folded into the integrand (in log form) so
    the absolute tolerance applies to a quantity of order one.
    """
    alpha = float(alpha)
    if not alpha > -1.0 or not math.isfinite(alpha):
        raise DomainError(f"truncated_exp_real requires alpha > -1 (got {alpha!r})")
    log_norm = math.lgamma(alpha + 1.0)

    def integrand(s: float) -> float:
        log_value = -s + alpha * math.log1p(s) - log_norm
        return math.exp(log_value) if log_value > -745.0 else 0.0

    return integrate_semi_infinite(integrand, 0.0, cfg).value


def truncated_exp_gaussian(x: float) -> float:
    """Umbral Gaussian exp(-e x^2) = sum_r (-1)^r e_r x^(2r) / r!.

    Evaluated through e_r = e - R_r as
    ``e * exp(-x^2) - sum_r (-1)^r R_r x^(2r) / r!``.  The remainder series
    still cancels like exp(2|x|), so the sum is carried in extended
    precision sized to |x|.
    """
    import mpmath

    x = abs(float(x))
    digits = 20 + int(2.0 * x / math.log(10.0)) + 1
    log_floor = -digits * math.log(10.0)
    r_max = 1
    log_x = math.log(x) if x > 0.0 else -math.inf
    while r_max <= x or 2 * r_max * log_x - 2.0 * math.lgamma(r_max + 1.0) > log_floor:
        r_max += 1
    with mpmath.workdps(digits):
        z = mpmath.mpf(x) ** 2
        # R_r for r = r_max .. 0 by R_r = 1/(r+1)! + R_{r+1}
        inv_fact = 1 / mpmath.factorial(r_max + 1)
        tail = mpmath.mpf(0)
        term = inv_fact
        k = r_max + 1
        while term > tail * mpmath.eps:
            tail += term
            k += 1
            term /= k
        remainders = [mpmath.mpf(0)] * (r_max + 1)
        remainders[r_max] = tail
        for r in range(r_max - 1, -1, -1):
            inv_fact *= r + 2
            remainders[r] = remainders[r + 1] + inv_fact
        total = mpmath.mpf(0)
        weight = mpmath.mpf(1)  # (-z)^r / r!
        for r in range(r_max + 1):
            total += remainders[r] * weight
            weight *= -z / (r + 1)
        return float(mpmath.e * mpmath.exp(-z) - total)
