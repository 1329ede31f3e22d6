"""Harmonic Appell polynomials and harmonic Hermite polynomials.

Polynomials are dense, immutable and exact (``Fraction`` coefficients,
index = power).  The families:

    harmonic_poly(n)    = sum_s C(n, s) h_s x^(n-s)                 (h_0 -> 1)
    f_poly(n)           = sum_s C(n, s) x^(n-s) / (s + 1) = int_0^1 (x + y)^n dy
    harmonic_hermite(n) = n! sum_r h_r x^(n-2r) / ((n-2r)! r!)      (h_0 -> 1)
    alpha_poly(n)       = n! sum_{s>=1} x^(n-2s) / (s! (n-2s)! (s+1))
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainError
from .sequences import harmonic_exact, harmonic_umbral


class DensePoly:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int | Fraction = 1) -> "DensePoly":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DensePoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == DensePoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def _coerce(self, other) -> "DensePoly":
        if isinstance(other, DensePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DensePoly([other])
        return NotImplemented

    def __add__(self, other) -> "DensePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coeffs), len(other._coeffs))
        return DensePoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "DensePoly":
        return DensePoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "DensePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "DensePoly":
        return (-self) + other

    def __mul__(self, other) -> "DensePoly":
        if isinstance(other, (int, Fraction)):
            return DensePoly(c * other for c in self._coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return DensePoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return DensePoly(out)

    __rmul__ = __mul__

    def derivative(self, order: int = 1) -> "DensePoly":
        p = self
        for _ in range(order):
            p = DensePoly(k * c for k, c in enumerate(p._coeffs) if k)
        return p

    def shift_up(self, by: int = 1) -> "DensePoly":
        """Multiply by x^by."""
        if self.is_zero():
            return self
        return DensePoly([0] * by + list(self._coeffs))

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for rational x, float otherwise."""
        if isinstance(x, Rational) and not isinstance(x, bool):
            acc: Fraction | float = Fraction(0)
            x = Fraction(x)
        else:
            acc = 0.0
            x = float(x)
        for c in reversed(self._coeffs):
            acc = acc * x + (c if isinstance(acc, Fraction) else float(c))
        return acc

    def __repr__(self) -> str:
        return f"DensePoly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


X = DensePoly([0, 1])


def _check_n(n: int, name: str, minimum: int = 0) -> int:
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise DomainError(f"{name} requires an integer n >= {minimum} (got {n!r})")
    return int(n)


def harmonic_poly(n: int) -> DensePoly:
    """h_n(x) = sum_{s=0}^n C(n, s) h_s x^(n-s), using h_0 = 1."""
    n = _check_n(n, "harmonic_poly")
    coeffs = [Fraction(0)] * (n + 1)
    for s in range(n + 1):
        coeffs[n - s] = comb(n, s) * harmonic_umbral(s)
    return DensePoly(coeffs)


def harmonic_poly_empty_sum(n: int) -> DensePoly:
    """Same binomial sum with the empty-sum convention h_0 = 0.

    Differs from :func:`harmonic_poly` by exactly x^n.
    """
    n = _check_n(n, "harmonic_poly_empty_sum")
    coeffs = [Fraction(0)] * (n + 1)
    for s in range(n + 1):
        coeffs[n - s] = comb(n, s) * harmonic_exact(s)
    return DensePoly(coeffs)


def f_poly(n: int) -> DensePoly:
    """f_n(x) = sum_s C(n, s) x^(n-s) / (s + 1)."""
    n = _check_n(n, "f_poly")
    coeffs = [Fraction(0)] * (n + 1)
    for s in range(n + 1):
        coeffs[n - s] = Fraction(comb(n, s), s + 1)
    return DensePoly(coeffs)


def harmonic_poly_next(p: DensePoly, n: int) -> DensePoly:
    """Apply the step (x + 1) p + f_n to ``p``.

    With the empty-sum family this maps h_n(x) to h_{n+1}(x) exactly; with
    the h_0 = 1 family the result overshoots h_{n+1}(x) by x^n.
    """
    n = _check_n(n, "harmonic_poly_next")
    return (X + 1) * p + f_poly(n)


def harmonic_poly_at_minus_one(n: int) -> Fraction:
    """Exact h_n(-1); equals (-1)^n (1 - 1/n) for n >= 1."""
    n = _check_n(n, "harmonic_poly_at_minus_one", minimum=1)
    return harmonic_poly(n)(Fraction(-1))


def harmonic_from_shifted(n: int) -> Fraction:
    """sum_{s=0}^n C(n, s) h_s(-1); equals the umbral h_n."""
    n = _check_n(n, "harmonic_from_shifted")
    return sum((comb(n, s) * harmonic_poly(s)(Fraction(-1)) for s in range(n + 1)), Fraction(0))


def hermite2(n: int, x: float, y: float) -> float:
    """Two-variable Hermite H_n(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!)."""
    n = _check_n(n, "hermite2")
    exact = all(isinstance(v, Rational) and not isinstance(v, bool) for v in (x, y))
    total = Fraction(0) if exact else 0.0
    for r in range(n // 2 + 1):
        coeff = factorial(n) // (factorial(n - 2 * r) * factorial(r))
        if exact:
            total += coeff * Fraction(x) ** (n - 2 * r) * Fraction(y) ** r
        else:
            total += coeff * float(x) ** (n - 2 * r) * float(y) ** r
    return total


def hermite2_poly_in_y(n: int, x: Fraction) -> DensePoly:
    """H_n(x, y) as an exact polynomial in y for fixed rational x."""
    n = _check_n(n, "hermite2_poly_in_y")
    x = Fraction(x)
    coeffs = [Fraction(0)] * (n // 2 + 1)
    for r in range(n // 2 + 1):
        coeffs[r] = Fraction(factorial(n), factorial(n - 2 * r) * factorial(r)) * x ** (n - 2 * r)
    return DensePoly(coeffs)


def harmonic_hermite(n: int) -> DensePoly:
    """Harmonic Hermite polynomial with the umbral y -> h substitution."""
    n = _check_n(n, "harmonic_hermite")
    coeffs = [Fraction(0)] * (n + 1)
    for r in range(n // 2 + 1):
        coeffs[n - 2 * r] = Fraction(factorial(n), factorial(n - 2 * r) * factorial(r)) * harmonic_umbral(r)
    return DensePoly(coeffs)


def alpha_poly(n: int) -> DensePoly:
    """alpha_n(x) = n! sum_{s=1}^{n//2} x^(n-2s) / (s! (n-2s)! (s+1)); zero for n < 2."""
    n = _check_n(n, "alpha_poly")
    coeffs = [Fraction(0)] * (n + 1)
    for s in range(1, n // 2 + 1):
        coeffs[n - 2 * s] = Fraction(factorial(n), factorial(s) * factorial(n - 2 * s) * (s + 1))
    return DensePoly(coeffs)


def harmonic_hermite_next(p: DensePoly, n: int) -> DensePoly:
    """x p + 2 p' + 2 alpha_n', the concrete form of (x + 2 h d/dx) p."""
    n = _check_n(n, "harmonic_hermite_next")
    return X * p + 2 * p.derivative() + 2 * alpha_poly(n).derivative()


def harmonic_hermite_ode_operator(n: int) -> DensePoly:
    """(x d/dx + 2 d^2/dx^2) H - n H + 2 alpha_n'' for H = harmonic_hermite(n).

    The identity holds iff this is the zero polynomial.
    """
    n = _check_n(n, "harmonic_hermite_ode_operator")
    h = harmonic_hermite(n)
    return X * h.derivative() + 2 * h.derivative(2) - n * h + 2 * alpha_poly(n).derivative(2)


def harmonic_hermite_ode_residual(n: int, x: float) -> float:
    """The ODE residual polynomial evaluated at ``x`` (expected 0)."""
    return harmonic_hermite_ode_operator(n)(x)


def polynomial_series(polys: Sequence[DensePoly], x: float, t: float) -> float:
    """sum_n t^n / n! p_n(x) over the given polynomials, in floating point."""
    total = 0.0
    weight = 1.0
    for n, p in enumerate(polys):
        if n:
            weight *= t / n
        total += weight * p(float(x))
    return total
