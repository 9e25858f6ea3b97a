"""Hermite-weighted theta sums on the right half-plane wedge.

Two summation surfaces:

  hermite_theta_weighted(n, ell, t): sum_{m>=1} m^ell H_n(sqrt(2 pi t) m) e^(-pi m^2 t)
  hermite_theta(j, x):               sum_{n>=1} f_2j(n sqrt(x)),
                                     f_n(x) = (8 pi)^(-n/2) H_n(sqrt(2 pi) x) e^(-pi x^2)

Both converge for Re of the argument > 0; the truncation logic bounds each
term by a Hermite envelope times the Gaussian factor and stops once the
geometric-dominated tail bound drops under the requested tolerance.
Hitting the term cap first raises ConvergenceError (never a silent
truncation), reporting the tail bound that was actually achieved.

The inversion law under x -> 1/x (hermite_theta picks up (-1)^j / sqrt(x)
plus an affine correction) and the odd/even-index recombination around
x = i are exposed as residual/consistency operations so they can be
checked, not assumed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._util import CompensatedSum
from .errors import ConvergenceError, DomainError
from .special import double_factorial, hermite


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the infinite theta sums."""

    tail_tol: float = 1e-14
    max_terms: int = 10000

    def __post_init__(self) -> None:
        if not self.tail_tol > 0.0:
            raise DomainError("tail_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class ThetaArgument:
    """Argument constrained to the convergence wedge |arg x| < pi/2."""

    x: complex

    def __post_init__(self) -> None:
        x = complex(self.x)
        if not (x.real > 0.0 and math.isfinite(x.real) and math.isfinite(x.imag)):
            raise DomainError(f"theta argument {x} is outside the open right half-plane")
        object.__setattr__(self, "x", x)


def _wedge(x) -> complex:
    if isinstance(x, ThetaArgument):
        return x.x
    return ThetaArgument(complex(x)).x


class ThetaSum(NamedTuple):
    value: complex
    terms_used: int
    tail_bound: float


def hermite_gaussian(n: int, x: complex) -> complex:
    """f_n(x) = (8 pi)^(-n/2) H_n(sqrt(2 pi) x) exp(-pi x^2)."""
    if n < 0:
        raise DomainError("order must be >= 0")
    x = complex(x)
    return (8.0 * math.pi) ** (-n / 2.0) * hermite(n, math.sqrt(2.0 * math.pi) * x) * cmath.exp(-math.pi * x * x)


def hermite_gaussian_at_zero(j: int) -> float:
    """Closed form f_2j(0) = (-1)^j (4 pi)^(-j) (2j-1)!!."""
    if j < 0:
        raise DomainError("order must be >= 0")
    return (-1) ** j * (4.0 * math.pi) ** (-j) * double_factorial(2 * j - 1)


def _envelope(n: int, r: float) -> float:
    # E_n(r) >= |H_n(z)| for all |z| <= r, by running the recurrence on moduli.
    e0, e1 = 1.0, 2.0 * r
    if n == 0:
        return e0
    for k in range(1, n):
        e0, e1 = e1, 2.0 * r * e1 + 2.0 * k * e0
    return e1


def _term_bound(n: int, ell: int, w_abs: float, re_t: float, m: int) -> float:
    return m**ell * _envelope(n, w_abs * m) * math.exp(-math.pi * m * m * re_t)


def _gauss_factor(m2: int, x: complex) -> complex:
    """exp(-pi m2 x) with the phase reduced mod 2 pi in exact arithmetic.

    The naive route computes sin/cos of pi m2 Im(x), several hundred
    radians for boundary-near x, losing ~|arg| * eps absolutely.  Since
    m2 is an integer and Im(x)/2 is an exact binary rational, the
    fractional part of m2 Im(x)/2 (all that the phase depends on) is
    computable exactly with integer arithmetic.
    """
    mag = math.exp(-math.pi * m2 * x.real)
    if x.imag == 0.0:
        return complex(mag, 0.0)
    num, den = (x.imag / 2.0).as_integer_ratio()
    frac = (m2 * num) % den / den
    return mag * cmath.exp(complex(0.0, -2.0 * math.pi * frac))


def hermite_theta_weighted(n: int, ell: int, t, ctl: SeriesControl = DEFAULT_CONTROL) -> ThetaSum:
    """sum_{m>=1} m^ell H_n(sqrt(2 pi t) m) exp(-pi m^2 t) for Re t > 0.

    n must be even: odd n would make the summand double-valued in t through
    the square root.  Returns the value, the number of terms consumed, and
    the certified bound on the discarded tail.
    """
    if n < 0 or n % 2 != 0:
        raise DomainError("hermite order n must be even and >= 0")
    if ell < 0:
        raise DomainError("ell must be >= 0")
    t = _wedge(t)
    w = cmath.sqrt(2.0 * math.pi * t)
    w_abs = abs(w)
    re_t = t.real
    acc = CompensatedSum()
    m = 0
    while True:
        m += 1
        if m > ctl.max_terms:
            achieved = _term_bound(n, ell, w_abs, re_t, m)
            raise ConvergenceError(
                f"theta sum at t={t} needs more than {ctl.max_terms} terms "
                f"(achieved tail bound {achieved:.3e}, requested {ctl.tail_tol:.3e})",
                achieved_tail=achieved,
                terms_used=m - 1,
            )
        acc.add(m**ell * hermite(n, w * m) * _gauss_factor(m * m, t))
        nxt = _term_bound(n, ell, w_abs, re_t, m + 1)
        ratio = _term_bound(n, ell, w_abs, re_t, m + 2) / nxt if nxt > 0.0 else 0.0
        if ratio < 0.5:
            tail = nxt / (1.0 - ratio)
            if tail < ctl.tail_tol:
                return ThetaSum(acc.value, m, tail)


def theta_abs_bound(n: int, ell: int, t) -> float:
    """Upper bound on sum_{m>=1} of the term moduli at t (tail majorant)."""
    t = _wedge(t)
    w_abs = abs(cmath.sqrt(2.0 * math.pi * t))
    re_t = t.real
    total = 0.0
    m = 0
    while True:
        m += 1
        b = _term_bound(n, ell, w_abs, re_t, m)
        nxt = _term_bound(n, ell, w_abs, re_t, m + 1)
        ratio = nxt / b if b > 0.0 else 0.0
        if ratio < 0.5:
            return total + b / (1.0 - ratio)
        total += b
        if m > 100000:  # Re t pathologically small; give a finite answer
            return total + b


def gaussian_hermite_moment(n: int, ell: int) -> float:
    """integral over R of w^ell H_n(sqrt(2 pi) w) exp(-pi w^2) dw.

    Needs n + ell even (odd integrands vanish and are not used here).
    Evaluates through the explicit Hermite coefficients and the Gaussian
    moments Gamma(r+1/2)/pi^(r+1/2), carried as exact rationals times
    pi^(-ell/2).  For ell = 0 this collapses to (2q)!/q! at n = 2q.
    """
    if n < 0 or ell < 0 or (n + ell) % 2 != 0:
        raise DomainError("gaussian_hermite_moment needs n, ell >= 0 with n + ell even")
    total = Fraction(0)
    for k in range(n // 2 + 1):
        u = (n - 2 * k) // 2  # power of 8 pi from (2 sqrt(2 pi))^(n-2k)
        r = u + ell // 2
        coef = Fraction((-1) ** k * math.factorial(n), math.factorial(k) * math.factorial(n - 2 * k))
        term = coef * Fraction(8**u) * Fraction(double_factorial(2 * r - 1), 2**r)
        total += term
    return float(total) * math.pi ** (-ell / 2.0)


def theta_small_argument_asymptote(n: int, ell: int, t: complex) -> complex:
    """Poisson-summation principal part of hermite_theta_weighted as t -> 0.

    Equals (1/2) t^(-(ell+1)/2) * gaussian_hermite_moment(n, ell)
    minus H_n(0)/2 when ell = 0.  The discarded remainder is a sum of
    shifted Fourier modes of size exp(-pi/t), so for Re t <= 0.05 the
    asymptote carries more than 20 correct digits.
    """
    t = complex(t)
    moment = gaussian_hermite_moment(n, ell)
    value = 0.5 * moment * t ** (-(ell + 1) / 2.0)
    if ell == 0:
        value -= 0.5 * hermite(n, 0.0)
    return value


def hermite_theta(j: int, x, ctl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """sum_{n>=1} f_2j(n sqrt(x)), principal branch of sqrt(x), Re x > 0.

    Equals (8 pi)^(-j) hermite_theta_weighted(2j, 0, x): the sqrt of the
    positive prefactor factors through the principal branch inside the
    wedge.
    """
    if j < 0:
        raise DomainError("index j must be >= 0")
    x = _wedge(x)
    return (8.0 * math.pi) ** (-j) * hermite_theta_weighted(2 * j, 0, x, ctl).value


def inversion_residual(j: int, x, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """|LHS - RHS| of the x -> 1/x inversion law for hermite_theta.

    The law: psi(x) = (-1)^j x^(-1/2) psi(1/x)
                      + [(-1)^j x^(-1/2) - 1] f_2j(0) / 2.
    Both sides are summed independently; a healthy evaluation returns a
    residual of order the tail tolerance.
    """
    x = _wedge(x)
    lhs = hermite_theta(j, x, ctl)
    inv_sqrt = (-1) ** j / cmath.sqrt(x)
    rhs = inv_sqrt * hermite_theta(j, 1.0 / x, ctl) + 0.5 * (inv_sqrt - 1.0) * hermite_gaussian_at_zero(j)
    return abs(lhs - rhs)


def parity_split_recombination(
    j: int, x, ctl: SeriesControl = DEFAULT_CONTROL
) -> tuple[complex, complex]:
    """Direct hermite_theta(j, x) next to its odd/even recombination at x = i.

    The recombined value carries the exact phases exp(-pi n^2 (x - i)):
      - sum over odd n of H_2j(sqrt(2 pi x) n) exp(-pi n^2 (x-i))
      + sum over even n = 2k  of H_2j(sqrt(2 pi x) 2k) exp(-4 pi k^2 (x-i)),
    all times (8 pi)^(-j).  The two returned values must agree; the split
    sums converge on the same wedge Re x > 0.
    """
    if j < 0:
        raise DomainError("index j must be >= 0")
    x = _wedge(x)
    w = cmath.sqrt(2.0 * math.pi * x)
    w_abs = abs(w)
    re_x = x.real
    shift = x - 1j

    def half_sum(start: int, step: int) -> complex:
        acc = CompensatedSum()
        n = start
        while True:
            if n > ctl.max_terms:
                achieved = _term_bound(2 * j, 0, w_abs, re_x, n)
                raise ConvergenceError(
                    f"parity split at x={x} needs more than {ctl.max_terms} terms",
                    achieved_tail=achieved,
                    terms_used=n - 1,
                )
            acc.add(hermite(2 * j, w * n) * _gauss_factor(n * n, shift))
            nxt = _term_bound(2 * j, 0, w_abs, re_x, n + step)
            ratio = _term_bound(2 * j, 0, w_abs, re_x, n + 2 * step) / nxt if nxt > 0.0 else 0.0
            if ratio < 0.5 and nxt / (1.0 - ratio) < ctl.tail_tol:
                return acc.value
            n += step

    recombined = (8.0 * math.pi) ** (-j) * (half_sum(2, 2) - half_sum(1, 2))
    return hermite_theta(j, x, ctl), recombined
