"""Command-line front end.

Verbs::

    harmonic-umbral eval TARGET [--n N] [--x X] ...
    harmonic-umbral table TARGET --from A --to B --step S [fixed args]
    harmonic-umbral verify [--id ID ...] [--tol T]
    harmonic-umbral constants

Exit codes: 0 success, 1 verification failure, 2 usage error or unknown
target, 3 domain error, 4 unknown check id, 5 non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, InvalidOperation, localcontext
from fractions import Fraction
from typing import Callable, Sequence

from . import harness, polynomials, sequences, specfun, umbral
from .errors import DomainError, NonConvergence
from .quadrature import QuadConfig
from .umbral import SeriesConfig

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_UNKNOWN_CHECK = 4
EXIT_NONCONVERGENCE = 5

SIGNIFICANT_DIGITS = 15
TOL_ENV = "UMBRAL_DEFAULT_TOL"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def _round_decimal(d: Decimal) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = SIGNIFICANT_DIGITS
        ctx.rounding = ROUND_HALF_EVEN
        return (+d).normalize()


def _decimal_text(d: Decimal) -> str:
    if d.is_zero():
        return "0"
    if -7 <= d.adjusted() < SIGNIFICANT_DIGITS:
        return format(d, "f")
    return format(d, "e")


def format_real(value: float) -> str:
    """Render a float to 15 significant digits, round-half-even."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return _decimal_text(_round_decimal(Decimal(value)))


def format_fraction_decimal(value: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = SIGNIFICANT_DIGITS + 5
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return _decimal_text(_round_decimal(quotient))


def format_value(value) -> str:
    """Exact values print as "p/q ≈ decimal"; integers and floats print plainly."""
    if isinstance(value, polynomials.DensePoly):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value} ≈ {format_fraction_decimal(value)}"
    return format_real(float(value))


def _exact_field(value) -> str | None:
    if isinstance(value, (Fraction, polynomials.DensePoly)):
        return str(value)
    return None


def _decimal_field(value) -> float | None:
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, polynomials.DensePoly):
        return None
    return float(value)


def _decimal_text_of(value) -> str:
    if isinstance(value, Fraction):
        return format_fraction_decimal(value)
    return format_real(float(value))


def _table_value(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return format_real(float(value))


# ---------------------------------------------------------------------------
# targets


@dataclass(frozen=True)
class Target:
    params: tuple[str, ...]
    optional: tuple[str, ...]
    sweep: str | None
    func: Callable[..., object]
    help: str


def _int_arg(value: Decimal, name: str) -> int:
    if value != value.to_integral_value():
        raise DomainError(f"--{name} must be an integer (got {value})")
    return int(value)


def _real(value: Decimal) -> float:
    return float(value)


def _poly_target(build: Callable[[int], polynomials.DensePoly]):
    def run(ctx: "_Context", n: Decimal, x: Decimal | None = None):
        p = build(_int_arg(n, "n"))
        return p if x is None else p(float(x))

    return run


@dataclass(frozen=True)
class _Context:
    quad: QuadConfig
    series: SeriesConfig
    route: str


TARGETS: dict[str, Target] = {
    "harmonic": Target(("n",), (), "n", lambda c, n: sequences.harmonic_exact(_int_arg(n, "n")), "exact h_n (h_0 = 0)"),
    "harmonic-umbral": Target(("n",), (), "n", lambda c, n: sequences.harmonic_umbral(_int_arg(n, "n")), "umbral h_n (h_0 = 1)"),
    "harmonic-real": Target(
        ("nu",), (), "nu", lambda c, nu: sequences.harmonic_real(_real(nu), c.route, c.quad).value, "h_nu for real nu > -1"
    ),
    "digamma": Target(("x",), (), "x", lambda c, x: specfun.digamma(_real(x)), "psi(x), x > 0"),
    "e1": Target(("x",), (), "x", lambda c, x: specfun.exp_integral_e1(_real(x)), "exponential integral E1(x)"),
    "gamma-upper": Target(("a", "x"), (), "x", lambda c, a, x: specfun.upper_incomplete_gamma(_real(a), _real(x)), "Gamma(a, x)"),
    "euler-gamma": Target((), (), None, lambda c: specfun.euler_gamma(), "Euler-Mascheroni constant"),
    "hbef": Target(("x",), (), "x", lambda c, x: umbral.hbef(_real(x), c.series).value, "HBEF series"),
    "hbef-closed": Target(("x",), (), "x", lambda c, x: umbral.hbef_closed(_real(x)), "HBEF closed form, x > 0"),
    "hbef-deriv": Target(
        ("x", "m"), (), "x", lambda c, x, m: umbral.hbef_derivative(_real(x), _int_arg(m, "m"), c.series).value, "m-th HBEF derivative"
    ),
    "hbef-deriv-rec": Target(
        ("x", "m"),
        (),
        "x",
        lambda c, x, m: umbral.hbef_derivative_via_recurrence(_real(x), _int_arg(m, "m"), c.series),
        "m-th HBEF derivative by recurrence",
    ),
    "hbef-sqrt": Target(("x",), (), "x", lambda c, x: umbral.hbef_sqrt(_real(x), c.series).value, "half-index HBEF"),
    "hbef-h2": Target(("x",), (), "x", lambda c, x: umbral.hbef_h2(_real(x), c.series).value, "umbral exp(h^2 x)"),
    "reciprocal": Target(
        ("alpha",), (), "alpha", lambda c, alpha: umbral.reciprocal_series(_real(alpha), c.series).value, "umbral 1/(1 + alpha h)"
    ),
    "binomial-sqrt": Target(
        ("alpha",), (), "alpha", lambda c, alpha: umbral.binomial_sqrt_series(_real(alpha), c.series).value, "umbral sqrt(pi/(1 + alpha h))"
    ),
    "g-half": Target(("eta",), (), "eta", lambda c, eta: umbral.g_half(_real(eta)), "Laplace density g_1/2"),
    "e-trunc": Target(("n",), (), "n", lambda c, n: sequences.truncated_exp_exact(_int_arg(n, "n")), "exact e_n"),
    "e-trunc-real": Target(
        ("alpha",), (), "alpha", lambda c, alpha: sequences.truncated_exp_real(_real(alpha), c.quad), "e_alpha for real alpha > -1"
    ),
    "umbral-gaussian": Target(("x",), (), "x", lambda c, x: sequences.truncated_exp_gaussian(_real(x)), "umbral exp(-e x^2)"),
    "h-poly": Target(("n",), ("x",), "x", _poly_target(polynomials.harmonic_poly), "harmonic polynomial h_n(x)"),
    "f-poly": Target(("n",), ("x",), "x", _poly_target(polynomials.f_poly), "f_n(x)"),
    "hh-poly": Target(("n",), ("x",), "x", _poly_target(polynomials.harmonic_hermite), "harmonic Hermite polynomial"),
    "alpha-poly": Target(("n",), ("x",), "x", _poly_target(polynomials.alpha_poly), "alpha_n(x)"),
    "hermite2": Target(
        ("n", "x", "y"),
        (),
        "x",
        lambda c, n, x, y: polynomials.hermite2(_int_arg(n, "n"), _real(x), _real(y)),
        "two-variable Hermite H_n(x, y)",
    ),
    "h-minus-one": Target(
        ("n",), (), "n", lambda c, n: polynomials.harmonic_poly_at_minus_one(_int_arg(n, "n")), "exact h_n(-1), n >= 1"
    ),
}

_VALUE_FLAGS = ("n", "x", "y", "m", "nu", "alpha", "eta", "a")


# ---------------------------------------------------------------------------
# output helpers


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw == "":
        return 1e-10
    try:
        return float(raw)
    except ValueError as exc:
        raise UsageError(f"{TOL_ENV} must be a number (got {raw!r})") from exc


def _configs(args: argparse.Namespace) -> tuple[QuadConfig, SeriesConfig]:
    tol = args.tol if args.tol is not None else _default_tol()
    quad = QuadConfig(tol=tol)
    series = SeriesConfig(tol=args.series_tol) if args.series_tol is not None else SeriesConfig()
    return quad, series


def _decimal(text: str) -> Decimal:
    try:
        value = Decimal(text)
    except InvalidOperation as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not value.is_finite():
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _lookup(name: str) -> Target:
    try:
        return TARGETS[name]
    except KeyError:
        raise UsageError(f"unknown target {name!r}; choose from: {', '.join(sorted(TARGETS))}") from None


def _collect(target: Target, args: argparse.Namespace, skip: str | None = None) -> dict[str, Decimal | None]:
    values: dict[str, Decimal | None] = {}
    for name in target.params:
        if name == skip:
            continue
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"target {args.target!r} requires --{name}")
        values[name] = value
    for name in target.optional:
        if name != skip:
            values[name] = getattr(args, name)
    return values


def _call(target: Target, ctx: _Context, values: dict[str, Decimal | None]):
    kwargs = {k: v for k, v in values.items() if v is not None}
    return target.func(ctx, **kwargs)


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args: argparse.Namespace) -> int:
    target = _lookup(args.target)
    quad, series = _configs(args)
    ctx = _Context(quad, series, args.route)
    values = _collect(target, args)
    result = _call(target, ctx, values)
    shown_args = {k: str(v) for k, v in values.items() if v is not None}
    if args.format == "json":
        payload = {
            "target": args.target,
            "args": shown_args,
            "value": _decimal_field(result),
            "exact": _exact_field(result),
            "text": format_value(result),
        }
        _emit(json.dumps(payload) + "\n", args.out)
    elif args.format == "csv":
        decimal = "" if isinstance(result, polynomials.DensePoly) else _decimal_text_of(result)
        _emit(_csv_text(("target", "exact", "value"), [(args.target, _exact_field(result) or "", decimal)]), args.out)
    else:
        _emit(format_value(result) + "\n", args.out)
    return EXIT_OK


def _frange(start: Decimal, stop: Decimal, step: Decimal) -> list[Decimal]:
    if step <= 0:
        raise UsageError("--step must be > 0")
    if stop < start:
        raise UsageError("--to must be >= --from")
    count = int((stop - start) / step) + 1
    return [start + k * step for k in range(count)]


def cmd_table(args: argparse.Namespace) -> int:
    target = _lookup(args.target)
    if target.sweep is None:
        raise UsageError(f"target {args.target!r} has no variable to tabulate")
    if args.start is None or args.stop is None or args.step is None:
        raise UsageError("table requires --from, --to and --step")
    quad, series = _configs(args)
    ctx = _Context(quad, series, args.route)
    fixed = _collect(target, args, skip=target.sweep)
    points = _frange(args.start, args.stop, args.step)
    rows = []
    for point in points:
        values = dict(fixed)
        values[target.sweep] = point
        rows.append((point, _call(target, ctx, values)))

    def shown(point: Decimal) -> str:
        return _decimal_text(point.normalize())

    if args.format == "json":
        payload = [
            {"x": float(p), "value": _table_value(v) if isinstance(v, Fraction) else float(v), "decimal": float(v)}
            for p, v in rows
        ]
        _emit(json.dumps(payload) + "\n", args.out)
    elif args.format == "csv":
        _emit(_csv_text(("x", "value"), [(shown(p), _table_value(v)) for p, v in rows]), args.out)
    else:
        width = max(len(shown(p)) for p, _ in rows)
        lines = [f"{'x'.ljust(width)}  value"]
        lines += [f"{shown(p).ljust(width)}  {format_value(v)}" for p, v in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    quad, series = _configs(args)
    ids = args.id or None
    if ids:
        unknown = [i for i in ids if i not in harness.CHECK_IDS]
        if unknown:
            sys.stderr.write(
                f"unknown check id(s): {', '.join(unknown)}; available: {', '.join(harness.CHECK_IDS)}\n"
            )
            return EXIT_UNKNOWN_CHECK
    reports = harness.run_all(quad, series, ids)
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in reports], indent=2) + "\n", args.out)
    elif args.format == "csv":
        rows = [
            (r.id, r.identity, r.to_dict()["max_abs_error"], " ".join(repr(v) for v in r.worst_point), r.tolerance, r.passed, r.notes)
            for r in reports
        ]
        _emit(_csv_text(("id", "identity", "max_abs_error", "worst_point", "tolerance", "passed", "notes"), rows), args.out)
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{status}  {r.id:<22} max_err={r.max_abs_error:.3e}  tol={r.tolerance:.1e}  worst={r.worst_point}"
            )
            if r.notes:
                lines.append(f"      {r.notes}")
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_constants(args: argparse.Namespace) -> int:
    quad, _ = _configs(args)
    table = [
        ("euler_gamma", specfun.euler_gamma()),
        ("e", math.e),
        ("sqrt_pi", umbral.SQRT_PI),
        ("h_half", sequences.harmonic_real(0.5).value),
        ("e_minus_half", sequences.truncated_exp_real(-0.5, quad)),
        ("hbef_1", umbral.hbef(1.0).value),
    ]
    if args.format == "json":
        _emit(json.dumps(dict(table)) + "\n", args.out)
    elif args.format == "csv":
        _emit(_csv_text(("name", "value"), [(k, format_real(v)) for k, v in table]), args.out)
    else:
        width = max(len(k) for k, _ in table)
        _emit("".join(f"{k.ljust(width)}  {format_real(v)}\n" for k, v in table), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--tol", type=float, help=f"quadrature tolerance (default 1e-10, or ${TOL_ENV})")
    p.add_argument("--series-tol", dest="series_tol", type=float, help="series stopping tolerance")


def _add_values(p: argparse.ArgumentParser) -> None:
    for name in _VALUE_FLAGS:
        p.add_argument(f"--{name}", type=_decimal)
    p.add_argument("--route", choices=("digamma", "quadrature"), default="digamma", help="harmonic-real route")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-umbral",
        description="Harmonic-number exponential functions, umbral series and identity checks.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function", allow_abbrev=False)
    p_eval.add_argument("target", help="function name (see 'constants' or the README)")
    _add_values(p_eval)
    _add_common(p_eval)
    p_eval.set_defaults(handler=cmd_eval)

    p_table = sub.add_parser("table", help="tabulate a function over a range", allow_abbrev=False)
    p_table.add_argument("target")
    p_table.add_argument("--from", dest="start", type=_decimal)
    p_table.add_argument("--to", dest="stop", type=_decimal)
    p_table.add_argument("--step", type=_decimal)
    _add_values(p_table)
    _add_common(p_table)
    p_table.set_defaults(handler=cmd_table)

    p_verify = sub.add_parser("verify", help="run identity checks", allow_abbrev=False)
    p_verify.add_argument("--id", action="append", help="check id (repeatable)")
    _add_common(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_const = sub.add_parser("constants", help="print reference constants", allow_abbrev=False)
    _add_common(p_const)
    p_const.set_defaults(handler=cmd_constants)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except NonConvergence as exc:
        sys.stderr.write(f"non-convergence: {exc}\n")
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
