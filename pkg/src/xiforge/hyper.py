"""Terminating hypergeometric series and the attached polynomial families.

The central object is the degree-q polynomial

    hermite_mellin_poly(q, s) = (-1)^q / q! * 2F1(-q, s/2; 1/2; 2),

which arises as the polynomial factor of Mellin-transformed Hermite theta
sums.  It satisfies the reflection law p(s) = (-1)^q p(1-s), so all of its
zeros sit on the line Re s = 1/2.  The module also provides the direct
rising-factorial summation (an independent evaluation route used as an
oracle), the (8 pi)^-j scaled variant that weights the xi-function
integral representations, s-derivatives in two forms, the Laguerre-side
generalization, and the closed-form gamma ratio for the hypergeometric
value at the self-dual point.

Everything here terminates after at most q+1 terms.  The z=2 series
alternates and cancels, which is the dominant precision hazard, so all
sums run through compensated accumulation.  Double precision supports
q <= 25; larger q still evaluates but carries a PrecisionWarning.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from ._util import CompensatedSum
from .errors import DomainError, PrecisionWarning
from .special import POLE_TOL, digamma, log_gamma, pochhammer

# Degree beyond which 2^{3q} term growth and cancellation in double
# precision start eating into the documented tolerances.
Q_DOUBLE_CEILING = 25


@dataclass(frozen=True)
class PolyFamilySpec:
    """Index selecting a member of the polynomial families.

    q is the degree index; alpha, when present, selects the Laguerre-side
    family and must exceed -1.
    """

    q: int
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.q < 0:
            raise DomainError("degree index q must be >= 0")
        if self.alpha is not None and not self.alpha > -1.0:
            raise DomainError("alpha must be > -1")


def _warn_if_beyond_ceiling(q: int) -> None:
    if q > Q_DOUBLE_CEILING:
        warnings.warn(
            f"q={q} exceeds the double-precision validity ceiling "
            f"({Q_DOUBLE_CEILING}); expect degraded accuracy",
            PrecisionWarning,
            stacklevel=3,
        )


def hyp2f1_terminating(q: int, b: complex, c: complex, z: complex) -> complex:
    """2F1(-q, b; c; z) as the exact (q+1)-term sum.

    Terms are generated by the ratio recurrence and accumulated with
    compensation, in increasing k.  Raises DomainError if (c)_k vanishes
    for some k <= q, i.e. if c is within pole tolerance of a non-positive
    integer -m with m < q.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    c = complex(c)
    m = round(c.real)
    if m <= 0 and -m < q and abs(c - m) <= POLE_TOL:
        raise DomainError(f"c={c} makes a Pochhammer factor vanish inside the sum")
    acc = CompensatedSum()
    term = 1.0 + 0.0j
    acc.add(term)
    for k in range(q):
        term *= (k - q) * (b + k) / ((c + k) * (k + 1)) * z
        acc.add(term)
    return acc.value


def hermite_mellin_poly(q: int, s: complex) -> complex:
    """Degree-q critical-line polynomial (-1)^q/q! * 2F1(-q, s/2; 1/2; 2)."""
    _warn_if_beyond_ceiling(q)
    prefactor = (-1) ** q / math.factorial(q)
    return prefactor * hyp2f1_terminating(q, s / 2.0, 0.5, 2.0)


def hermite_mellin_lead(q: int) -> float:
    """Leading coefficient of hermite_mellin_poly in s: 1/((1/2)_q q!)."""
    return 1.0 / (pochhammer(0.5, q) * math.factorial(q))


def rising_factorial_sum(q: int, s: complex) -> complex:
    """Direct power-form core sum, an independent route to the polynomial.

    Evaluates sum_{k=0}^{q-1} (-1)^k 2^{3(q-k)} / (k! (2q-2k)!) (s/2)_{q-k};
    adding (-1)^q/q! reproduces hermite_mellin_poly.  Coefficients are kept
    as exact rationals until the multiply against the complex Pochhammer.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    acc = CompensatedSum()
    for k in range(q):
        coef = Fraction((-1) ** k * 2 ** (3 * (q - k)), math.factorial(k) * math.factorial(2 * q - 2 * k))
        term = float(coef) * pochhammer(s / 2.0, q - k)
        if not (math.isfinite(term.real) and math.isfinite(term.imag)):
            raise OverflowError(f"rising_factorial_sum overflowed at q={q}")
        acc.add(term)
    return acc.value


def xi_weight_poly(j: int, s: complex) -> complex:
    """(8 pi)^-j (2j)! times hermite_mellin_poly(j, s).

    This is the polynomial weight that multiplies 2 xi(s)/(s(s-1)) in the
    split integral representations.  Defined by delegation to the same
    2F1 kernel so the two families cannot drift apart.
    """
    return (8.0 * math.pi) ** (-j) * math.factorial(2 * j) * hermite_mellin_poly(j, s)


def _poch_and_deriv(z: complex, n: int) -> tuple[complex, complex]:
    # (z)_n and d/dz (z)_n, accumulated jointly so the derivative needs no
    # division (pole-free at z = 0, -1, ...).
    p = 1.0 + 0.0j
    dp = 0.0 + 0.0j
    for i in range(n):
        dp = dp * (z + i) + p
        p = p * (z + i)
    return p, dp


def d_hyp2f1_ds(q: int, s: complex, form: str = "rational") -> complex:
    """d/ds of 2F1(-q, s/2; 1/2; 2).

    form="rational" (default) uses the nested rational sum, which is a
    polynomial identity and therefore pole-free everywhere, in particular
    at s = 0.  form="digamma" evaluates the equivalent
    (s/2)_j [psi(s/2+j) - psi(s/2)] version and inherits digamma's poles.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    _warn_if_beyond_ceiling(q)
    if form not in ("rational", "digamma"):
        raise ValueError(f"unknown form {form!r}")
    half_s = s / 2.0
    acc = CompensatedSum()
    ratio = 1.0 + 0.0j  # (-q)_j / ((1/2)_j j!) * 2^j
    for j in range(1, q + 1):
        ratio *= (j - 1 - q) * 2.0 / ((j - 0.5) * j)
        if form == "rational":
            _, dp = _poch_and_deriv(half_s, j)
            acc.add(ratio * dp)
        else:
            poch_j = pochhammer(half_s, j)
            acc.add(ratio * poch_j * (digamma(half_s + j) - digamma(half_s)))
    return 0.5 * acc.value


def d_hyp2f1_at_zero(q: int) -> float:
    """Value of d_hyp2f1_ds at s = 0, via two independent closed forms.

    Computes both the half-sum (1/2) sum_j (-q)_j/(1/2)_j 2^j/j and the
    terminating -2q 3F2(1-q,1,1;3/2,2;2) rearrangement, each in exact
    rational arithmetic (every factor is rational), and insists they agree
    before converting to float.  The alternating terms grow fast enough
    that a double-precision summation would lose the 1e-12 comparison
    already around q = 12.
    """
    if q < 0:
        raise DomainError("q must be >= 0")
    if q == 0:
        return 0.0
    half_sum = Fraction(0)
    ratio = Fraction(1)
    for j in range(1, q + 1):
        ratio *= Fraction(4 * (j - 1 - q), 2 * j - 1)  # (-q)_j 2^j / (1/2)_j
        half_sum += ratio / j
    half_sum /= 2

    f32 = Fraction(0)
    term = Fraction(1)
    f32 += term
    for k in range(q - 1):
        # (1-q)_k (1)_k (1)_k / ((3/2)_k (2)_k k!) 2^k, ratio update
        term *= Fraction(4 * (1 - q + k) * (1 + k), (2 * k + 3) * (2 + k))
        f32 += term
    f32 *= -2 * q

    if half_sum != f32:
        raise ArithmeticError(
            f"dual forms of the s=0 derivative disagree at q={q}: {half_sum} vs {f32}"
        )
    return float(half_sum)


def laguerre_mellin_poly(n: int, alpha: float, s: complex) -> complex:
    """(1+alpha)_n / n! * 2F1(-n, s + alpha/2; alpha + 1; 2).

    The Laguerre-side Mellin polynomial; alpha = -1/2 reproduces the
    hermite_mellin_poly family up to normalization under s -> s/2 + 1/4.
    """
    spec = PolyFamilySpec(n, alpha)
    pref = pochhammer(1.0 + alpha, spec.q) / math.factorial(spec.q)
    return pref * hyp2f1_terminating(spec.q, s + alpha / 2.0, alpha + 1.0, 2.0)


def hyp2f1_gamma_ratio(n: int, alpha: float) -> complex:
    """Closed form of 2F1(-n, (alpha+1)/2; alpha+1; 2) as a gamma ratio.

    Returns Gamma(1/2) Gamma(-(n+alpha)/2) / (Gamma(-alpha/2) Gamma((1-n)/2))
    with pole-aware limits: the denominator pole at odd n forces the value
    0.  A numerator pole (- (n+alpha)/2 a non-positive integer) is a genuine
    pole of the expression and raises DomainError.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return 1.0 + 0.0j  # the gamma factors cancel pairwise
    if n % 2 == 1:
        return 0.0 + 0.0j
    num_arg = -(n + alpha) / 2.0
    m = round(num_arg)
    if m <= 0 and abs(num_arg - m) <= POLE_TOL:
        raise DomainError(f"gamma-ratio pole: -(n+alpha)/2 = {num_arg} is a non-positive integer")
    lg = (
        log_gamma(0.5)
        + log_gamma(complex(num_arg))
        - log_gamma(complex(-alpha / 2.0))
        - log_gamma(complex((1.0 - n) / 2.0))
    )
    return cmath.exp(lg)
