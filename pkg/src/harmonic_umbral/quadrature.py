"""Adaptive Gauss-Kronrod quadrature.

Three integral shapes are covered: a finite interval, a half line with
decaying integrand, and the full real line.  Every engine bisects the
interval with the largest error estimate (a global adaptive strategy) until
the summed |K15 - G7| estimate meets the absolute tolerance.

A fourth helper, :func:`integrate_oscillatory_tail`, handles half-line
integrands that decay only algebraically while oscillating, by integrating
period by period and extrapolating the partial sums.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NonConvergence

Integrand = Callable[[float], float]

# 15-point Kronrod abscissae (non-negative half) and weights; the odd-indexed
# nodes are the 7-point Gauss nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadConfig:
    """Tolerance and budget for the adaptive engines.

    ``tail_cutoff_factor`` is the length scale c of the half-line map
    x = a + c (1 - t) / t; it sets where the bulk of the mapped interval
    sits and does not truncate the domain.
    """

    tol: float = 1e-10
    max_subdivisions: int = 2000
    tail_cutoff_factor: float = 1.0

    def __post_init__(self) -> None:
        if not self.tol >= 1e-14:
            raise DomainError(f"QuadConfig.tol must be >= 1e-14 (got {self.tol!r})")
        if self.max_subdivisions < 1:
            raise DomainError("QuadConfig.max_subdivisions must be >= 1")
        if not self.tail_cutoff_factor > 0.0:
            raise DomainError("QuadConfig.tail_cutoff_factor must be > 0")


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_error_estimate: float
    subdivisions: int


def _kronrod15(f: Integrand, a: float, b: float) -> tuple[float, float]:
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resk = fc * _WGK[7]
    resg = fc * _WG[3]
    for j in range(7):
        dx = half * _XGK[j]
        pair = f(center - dx) + f(center + dx)
        resk += _WGK[j] * pair
        if j % 2 == 1:
            resg += _WG[j // 2] * pair
    resk *= half
    resg *= half
    if not (math.isfinite(resk) and math.isfinite(resg)):
        raise NonConvergence(f"non-finite integrand value on [{a!r}, {b!r}]")
    return resk, abs(resk - resg)


def _adaptive(f: Integrand, a: float, b: float, cfg: QuadConfig) -> QuadResult:
    value, err = _kronrod15(f, a, b)
    # max-heap on error; ties broken by left endpoint for determinism
    heap = [(-err, a, b, value)]
    total = value
    total_err = err
    pieces = 1
    frozen_err = 0.0  # error of intervals too narrow to split further
    while total_err > cfg.tol:
        if not heap:
            break
        if pieces >= cfg.max_subdivisions:
            raise NonConvergence(
                f"quadrature on [{a!r}, {b!r}] reached {pieces} subdivisions "
                f"with error estimate {total_err:.3e} > tol {cfg.tol:.1e}",
                estimate=total,
                error=total_err,
            )
        neg_err, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            frozen_err += -neg_err
            if total_err - frozen_err <= 0.0 and frozen_err > cfg.tol:
                raise NonConvergence(
                    f"quadrature on [{a!r}, {b!r}] exhausted floating-point resolution "
                    f"with error estimate {total_err:.3e}",
                    estimate=total,
                    error=total_err,
                )
            continue
        v1, e1 = _kronrod15(f, lo, mid)
        v2, e2 = _kronrod15(f, mid, hi)
        total += v1 + v2 - val
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        pieces += 1
    # re-sum to shed the drift of the running updates
    total = math.fsum(item[3] for item in heap) if heap else total
    total_err = max(math.fsum(-item[0] for item in heap) + frozen_err, 0.0)
    if total_err > cfg.tol:
        raise NonConvergence(
            f"quadrature on [{a!r}, {b!r}] could not reach tol {cfg.tol:.1e} "
            f"(estimate {total_err:.3e})",
            estimate=total,
            error=total_err,
        )
    return QuadResult(total, total_err, pieces)


def integrate_finite(f: Integrand, a: float, b: float, cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over [a, b].

    The integrand is never evaluated at the endpoints, so integrable endpoint
    singularities are allowed.
    """
    cfg = cfg or QuadConfig()
    if not a < b:
        raise DomainError(f"integrate_finite requires a < b (got a={a!r}, b={b!r})")
    return _adaptive(f, float(a), float(b), cfg)


def integrate_semi_infinite(f: Integrand, a: float, cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over [a, inf).

    Uses x = a + c (1 - t) / t with t in (0, 1], so the point at infinity
    lands on t = 0 where floating-point resolution is finest.  This is the
    map u = (x - a) / (x - a + c) read from the other end (t = 1 - u).
    A zero integrand value short-circuits the Jacobian, so integrands may
    return 0 where their weight underflows.
    """
    cfg = cfg or QuadConfig()
    c = cfg.tail_cutoff_factor
    a = float(a)

    def mapped(t: float) -> float:
        x = a + c * (1.0 - t) / t
        fx = f(x)
        if fx == 0.0:
            return 0.0
        return c * fx / t / t

    return _adaptive(mapped, 0.0, 1.0, cfg)


def integrate_real_line(f: Integrand, cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over the whole real line by splitting at zero."""
    cfg = cfg or QuadConfig()
    half_cfg = QuadConfig(0.5 * cfg.tol if cfg.tol >= 2e-14 else cfg.tol, cfg.max_subdivisions, cfg.tail_cutoff_factor)
    right = integrate_semi_infinite(f, 0.0, half_cfg)
    left = integrate_semi_infinite(lambda x: f(-x), 0.0, half_cfg)
    return QuadResult(
        right.value + left.value,
        right.abs_error_estimate + left.abs_error_estimate,
        right.subdivisions + left.subdivisions,
    )


def wynn_epsilon(partial_sums: list[float]) -> tuple[float, float]:
    """Extrapolate a sequence of partial sums with Wynn's epsilon algorithm.

    Returns the limit estimate and the difference between the last two
    even-column estimates as an error indicator.
    """
    n = len(partial_sums)
    if n < 3:
        last = partial_sums[-1]
        return last, abs(last - partial_sums[-2]) if n == 2 else math.inf
    prev = [0.0] * (n + 1)
    cur = list(partial_sums)
    estimates: list[float] = []
    col = 0
    while len(cur) > 1:
        nxt = []
        for i in range(len(cur) - 1):
            diff = cur[i + 1] - cur[i]
            if diff == 0.0:
                # sequence already converged at this depth
                nxt.append(math.inf)
            else:
                nxt.append(prev[i + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        col += 1
        if col % 2 == 0 and cur and math.isfinite(cur[-1]):
            estimates.append(cur[-1])
        if any(not math.isfinite(v) for v in cur):
            break
    if not estimates:
        return partial_sums[-1], abs(partial_sums[-1] - partial_sums[-2])
    best = estimates[-1]
    err = abs(estimates[-1] - estimates[-2]) if len(estimates) > 1 else abs(best - partial_sums[-1])
    return best, err


def integrate_oscillatory_tail(
    f: Integrand,
    a: float,
    half_period: float,
    cfg: QuadConfig | None = None,
    *,
    min_cycles: int = 8,
    max_cycles: int = 80,
) -> QuadResult:
    """Integrate an oscillating, algebraically decaying ``f`` over [a, inf).

    The half line is cut into pieces of length ``half_period`` (ideally
    aligned with sign changes of ``f``); each piece is integrated with
    :func:`integrate_finite` and the partial sums are extrapolated with
    :func:`wynn_epsilon`.  The reported error adds the extrapolation spread
    to the accumulated quadrature estimates.
    """
    cfg = cfg or QuadConfig()
    if not half_period > 0.0:
        raise DomainError("integrate_oscillatory_tail requires half_period > 0")
    piece_cfg = QuadConfig(max(cfg.tol * 0.01, 1e-14), cfg.max_subdivisions, cfg.tail_cutoff_factor)
    sums: list[float] = []
    running = 0.0
    quad_err = 0.0
    pieces = 0
    lo = float(a)
    limit, spread = math.nan, math.inf
    for k in range(max_cycles):
        hi = a + (k + 1) * half_period
        res = integrate_finite(f, lo, hi, piece_cfg)
        running += res.value
        quad_err += res.abs_error_estimate
        pieces += res.subdivisions
        sums.append(running)
        lo = hi
        if k + 1 >= min_cycles:
            limit, spread = wynn_epsilon(sums)
            if spread + quad_err <= cfg.tol:
                return QuadResult(limit, spread + quad_err, pieces)
    raise NonConvergence(
        f"oscillatory tail from {a!r} did not converge in {max_cycles} cycles "
        f"(spread {spread:.3e})",
        estimate=limit,
        error=spread + quad_err,
    )
