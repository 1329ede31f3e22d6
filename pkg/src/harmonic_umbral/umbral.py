"""The harmonic-based exponential function (HBEF) and its relatives.

Every series here is the umbral image of an ordinary exponential or binomial
expansion: powers h^n of the umbral symbol are replaced by harmonic numbers
through :func:`~harmonic_umbral.sequences.harmonic_umbral` (h^0 -> 1).

    hbef(x)            = 1 + sum_{n>=1} h_n x^n / n!
    hbef_derivative    = h_m + sum_{n>=1} h_{n+m} x^n / n!
    hbef_sqrt(x)       = 1 + sum_{n>=1} h_{n/2} x^n / n!
    hbef_h2(x)         = 1 + sum_{r>=1} h_{2r} x^r / r!
    reciprocal_series  = sum_s (-alpha)^s h_s                 (1 / (1 + alpha h))
    binomial_sqrt      = sqrt(pi) sum_r C(-1/2, r) alpha^r h_r (sqrt(pi / (1 + alpha h)))
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, NonConvergence
from .sequences import harmonic_real, harmonic_umbral_floats
from .specfun import EULER_GAMMA, exp_integral_e1

SQRT_PI = math.sqrt(math.pi)

# |alpha| limit for the geometric-type series
ALPHA_LIMIT = 0.95


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-15
    max_terms: int = 1000
    consecutive_small: int = 3

    def __post_init__(self) -> None:
        if not self.tol > 0.0:
            raise DomainError(f"SeriesConfig.tol must be > 0 (got {self.tol!r})")
        if self.max_terms < 10:
            raise DomainError("SeriesConfig.max_terms must be >= 10")
        if self.consecutive_small < 2:
            raise DomainError("SeriesConfig.consecutive_small must be >= 2")


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    last_term_magnitude: float


DEFAULT_SERIES = SeriesConfig()


def sum_series(terms: Iterable[float], cfg: SeriesConfig = DEFAULT_SERIES, name: str = "series") -> SeriesResult:
    """Sum ``terms`` until ``consecutive_small`` successive terms satisfy
    |term| <= tol * max(1, |partial sum|).

    Raises :class:`NonConvergence` when ``cfg.max_terms`` terms are consumed
    first.  A finite iterable that ends early is accepted as exact.
    """
    total = 0.0
    comp = 0.0  # Kahan compensation
    small = 0
    used = 0
    last = 0.0
    for term in terms:
        used += 1
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        last = abs(term)
        if last <= cfg.tol * max(1.0, abs(total)):
            small += 1
            if small >= cfg.consecutive_small:
                return SeriesResult(total, used, last)
        else:
            small = 0
        if used >= cfg.max_terms:
            raise NonConvergence(
                f"{name} did not converge within {cfg.max_terms} terms (last |term| = {last:.3e})",
                estimate=total,
                error=last,
            )
    return SeriesResult(total, max(used, 1), last)


def _exp_like_terms(x: float, coeffs: tuple[float, ...], shift: int = 0) -> Iterator[float]:
    # coeffs[n + shift] * x^n / n!, n = 0, 1, ...
    power = 1.0
    n = 0
    while True:
        yield coeffs[n + shift] * power
        n += 1
        power *= x / n


def _harmonic_coeffs(cfg: SeriesConfig, extra: int = 0) -> tuple[float, ...]:
    return harmonic_umbral_floats(cfg.max_terms + extra + 1)


def hbef(x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """HBEF 1 + sum_{n>=1} h_n x^n / n! summed as a power series.

    Entire in x; for large negative x the alternating terms cancel, costing
    about |x| / ln 10 digits (see :func:`hbef_weighted` for a robust form).
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"hbef requires finite x (got {x!r})")
    return sum_series(_exp_like_terms(x, _harmonic_coeffs(cfg)), cfg, "hbef")


def hbef_closed(x: float) -> float:
    """Closed form 1 + e^x (ln x + E1(x) + gamma), valid for x > 0."""
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"hbef_closed requires x > 0 (got {x!r}); use hbef for x <= 0")
    return 1.0 + math.exp(x) * (math.log(x) + exp_integral_e1(x) + EULER_GAMMA)


def hbef_derivative(x: float, m: int, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """m-th derivative h_m + sum_{n>=1} h_{n+m} x^n / n! (h_0 taken as 1)."""
    if isinstance(m, bool) or int(m) != m or m < 0:
        raise DomainError(f"hbef_derivative requires integer m >= 0 (got {m!r})")
    m = int(m)
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"hbef_derivative requires finite x (got {x!r})")
    coeffs = _harmonic_coeffs(cfg, extra=m)
    return sum_series(_exp_like_terms(x, coeffs, shift=m), cfg, "hbef_derivative")


@lru_cache(maxsize=None)
def _inhomogeneity_coeffs(count: int) -> tuple[float, ...]:
    # (e^x - 1 - x) / x = sum_{n>=1} x^n / ((n+1) n!); stored as c_n * n!
    return tuple(0.0 if n == 0 else 1.0 / (n + 1) for n in range(count))


def inhomogeneity_derivative(x: float, r: int, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """r-th derivative of (e^x - 1 - x)/x, from its Maclaurin series.

    With c_n = 1/((n+1) n!), the r-th derivative is
    sum_{n>=0} x^n / n! * [1 / (n + r + 1)], dropping the n + r = 0 term.
    """
    coeffs = _inhomogeneity_coeffs(cfg.max_terms + r + 2)
    return sum_series(_exp_like_terms(float(x), coeffs, shift=r), cfg, "inhomogeneity").value


def hbef_derivative_via_recurrence(x: float, m: int, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """hbef(x) + sum_{r=0}^{m-1} (d/dx)^r [(e^x - 1 - x)/x], for m >= 1."""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError(f"hbef_derivative_via_recurrence requires integer m >= 1 (got {m!r})")
    m = int(m)
    total = hbef(x, cfg).value
    for r in range(m):
        total += inhomogeneity_derivative(x, r, cfg)
    return total


@lru_cache(maxsize=None)
def _half_index_coeffs(count: int) -> tuple[float, ...]:
    return (1.0,) + tuple(harmonic_real(n / 2.0).value for n in range(1, count))


def hbef_sqrt(x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """Half-index HBEF 1 + sum_{n>=1} h_{n/2} x^n / n!."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"hbef_sqrt requires finite x (got {x!r})")
    size = 64
    while size < cfg.max_terms + 1:
        size *= 2
    return sum_series(_exp_like_terms(x, _half_index_coeffs(size)), cfg, "hbef_sqrt")


def hbef_h2(x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """1 + sum_{r>=1} h_{2r} x^r / r!, the umbral image of exp(h^2 x)."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"hbef_h2 requires finite x (got {x!r})")
    harm = harmonic_umbral_floats(2 * cfg.max_terms + 1)
    coeffs = tuple(harm[2 * r] for r in range(cfg.max_terms + 1))
    return sum_series(_exp_like_terms(x, coeffs), cfg, "hbef_h2")


def _check_alpha(alpha: float, name: str) -> float:
    alpha = float(alpha)
    if not abs(alpha) <= ALPHA_LIMIT:
        raise DomainError(f"{name} requires |alpha| <= {ALPHA_LIMIT} (got {alpha!r})")
    return alpha


def reciprocal_series(alpha: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """1 + sum_{s>=1} (-alpha)^s h_s, the umbral image of 1 / (1 + alpha h)."""
    alpha = _check_alpha(alpha, "reciprocal_series")
    harm = _harmonic_coeffs(cfg)

    def terms() -> Iterator[float]:
        power = 1.0
        for s in range(len(harm)):
            yield harm[s] * power
            power *= -alpha

    return sum_series(terms(), cfg, "reciprocal_series")


def binomial_half_coeff(r: int) -> float:
    """C(-1/2, r) = (-1)^r (2r)! / (4^r (r!)^2)."""
    value = 1.0
    for k in range(1, r + 1):
        value *= -(2 * k - 1) / (2.0 * k)
    return value


def binomial_sqrt_series(alpha: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """sqrt(pi) * sum_{r>=0} C(-1/2, r) alpha^r h_r, with h_0 -> 1.

    The umbral image of sqrt(pi / (1 + alpha h)).
    """
    alpha = _check_alpha(alpha, "binomial_sqrt_series")
    harm = _harmonic_coeffs(cfg)

    def terms() -> Iterator[float]:
        coeff = SQRT_PI
        for r in range(len(harm)):
            yield coeff * harm[r]
            coeff *= -alpha * (2 * r + 1) / (2.0 * (r + 1))

    return sum_series(terms(), cfg, "binomial_sqrt_series")


def binomial_sqrt_gamma_form(alpha: float, inner_sqrt_pi: bool = True, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """sqrt(pi) * (1 + k * sum_{r>=1} alpha^r h_r / (Gamma(1/2 - r) r!)).

    ``k`` is sqrt(pi) when ``inner_sqrt_pi`` is true and 1 otherwise.  The
    reciprocal Gamma uses 1/Gamma(1/2 - r) = (-1)^r Gamma(r + 1/2) / pi.
    """
    alpha = _check_alpha(alpha, "binomial_sqrt_gamma_form")
    harm = _harmonic_coeffs(cfg)
    k = SQRT_PI if inner_sqrt_pi else 1.0

    def terms() -> Iterator[float]:
        yield SQRT_PI
        for r in range(1, len(harm)):
            if alpha == 0.0:
                yield 0.0
                continue
            log_mag = math.lgamma(r + 0.5) - math.lgamma(r + 1.0) - math.log(math.pi) + r * math.log(abs(alpha))
            sign = (-1.0) ** r * (1.0 if alpha > 0 or r % 2 == 0 else -1.0)
            yield SQRT_PI * k * sign * harm[r] * math.exp(log_mag)

    return sum_series(terms(), cfg, "binomial_sqrt_gamma_form")


def g_half(eta: float) -> float:
    """Density (1 / (2 sqrt(pi eta^3))) exp(-1/(4 eta)) for eta > 0.

    Laplace-transform kernel with int_0^inf exp(-p eta x^2) g(eta) d eta =
    exp(-sqrt(p) x).  Returns 0 where the exponential underflows.
    """
    eta = float(eta)
    if not eta > 0.0:
        raise DomainError(f"g_half requires eta > 0 (got {eta!r})")
    if math.isinf(eta):
        return 0.0
    exponent = -0.25 / eta
    if exponent < -745.0:
        return 0.0
    return math.exp(exponent - 1.5 * math.log(eta)) / (2.0 * SQRT_PI)


# thresholds for hbef_weighted; see its docstring
_SERIES_NEG_LIMIT = 8.0
_SERIES_POS_LIMIT = 30.0
_ASYMPTOTIC_LIMIT = 40.0


def _scaled_negative_tail(y: float) -> float:
    """e^-y * sum_{n>=1} y^n / (n n!) for y > 0, without cancellation."""
    if y <= _ASYMPTOTIC_LIMIT:
        p = math.exp(-y)
        total = 0.0
        n = 0
        while True:
            n += 1
            p *= y / n
            term = p / n
            total += term
            if n > y and term <= 1e-17 * total:
                return total
    # e^-y (Ei(y) - gamma - ln y) with e^-y Ei(y) ~ sum_k k! / y^(k+1)
    term = 1.0 / y
    total = 0.0
    k = 0
    while True:
        total += term
        k += 1
        nxt = term * k / y
        if nxt >= term or nxt <= 1e-17 * total:
            break
        term = nxt
    return total - math.exp(-y) * (EULER_GAMMA + math.log(y))


def hbef_weighted(x: float, log_weight: float = 0.0, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """hbef(x) * exp(log_weight), stable for any real x.

    Intended for quadrature integrands, where the argument can be large:

    * -8 <= x <= 30: the power series;
    * x > 30: the closed form, scaled as e^(x + w) (ln x + E1(x) + gamma) + e^w;
    * x < -8: 1 - e^x sum y^n / (n n!) with y = -x, a positive-term sum
      (or its asymptotic expansion once y > 40).
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("hbef_weighted requires x that is not NaN")
    if x == -math.inf:
        return math.exp(log_weight)
    if -_SERIES_NEG_LIMIT <= x <= _SERIES_POS_LIMIT:
        if log_weight < -745.0:
            return 0.0
        return hbef(x, cfg).value * math.exp(log_weight)
    if x > 0.0:
        scale = x + log_weight
        if scale < -745.0:
            return 0.0
        bracket = math.log(x) + exp_integral_e1(x) + EULER_GAMMA
        return math.exp(scale) * bracket + math.exp(log_weight)
    if log_weight < -745.0:
        return 0.0
    return (1.0 - _scaled_negative_tail(-x)) * math.exp(log_weight)
