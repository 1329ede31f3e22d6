"""Harmonic-number exponential functions, umbral series and identity checks."""

from .errors import DomainError, NonConvergence, UmbralError
from .harness import CHECK_IDS, CheckReport, IdentityCheck, run_all
from .polynomials import (
    DensePoly,
    alpha_poly,
    f_poly,
    harmonic_hermite,
    harmonic_poly,
    hermite2,
)
from .quadrature import (
    QuadConfig,
    QuadResult,
    integrate_finite,
    integrate_real_line,
    integrate_semi_infinite,
)
from .sequences import (
    HarmonicValue,
    Route,
    harmonic_exact,
    harmonic_real,
    harmonic_umbral,
    truncated_exp_exact,
    truncated_exp_real,
)
from .specfun import (
    EULER_GAMMA,
    digamma,
    ein,
    exp_integral_e1,
    upper_incomplete_gamma,
)
from .umbral import (
    SeriesConfig,
    SeriesResult,
    binomial_sqrt_series,
    hbef,
    hbef_closed,
    hbef_derivative,
    reciprocal_series,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_IDS",
    "EULER_GAMMA",
    "CheckReport",
    "DensePoly",
    "DomainError",
    "HarmonicValue",
    "IdentityCheck",
    "NonConvergence",
    "QuadConfig",
    "QuadResult",
    "Route",
    "SeriesConfig",
    "SeriesResult",
    "UmbralError",
    "alpha_poly",
    "binomial_sqrt_series",
    "digamma",
    "ein",
    "exp_integral_e1",
    "f_poly",
    "harmonic_exact",
    "harmonic_hermite",
    "harmonic_poly",
    "harmonic_real",
    "harmonic_umbral",
    "hbef",
    "hbef_closed",
    "hbef_derivative",
    "hermite2",
    "integrate_finite",
    "integrate_real_line",
    "integrate_semi_infinite",
    "reciprocal_series",
    "run_all",
    "truncated_exp_exact",
    "truncated_exp_real",
    "upper_incomplete_gamma",
]
