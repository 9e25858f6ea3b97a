"""Complex Riemann zeta, its derivative, and the Hermite-theta zeta family.

zeta() is self-contained: a Chebyshev-accelerated alternating (eta) series
on Re s >= 1/2, Euler-Maclaurin summation on the strip |Re s| < 1/2 and as
a fallback where the eta prefactor 1 - 2^(1-s) nearly vanishes, and the
functional equation below.  zeta_deriv() differentiates each branch in
closed form; no numerical differencing anywhere.

The family value zeta_family(q, ell, s) is (2q)! zeta(s - ell) times the
critical-line polynomial of degree q.  Special values at positive even and
non-positive integer arguments run through exact Bernoulli rationals and
convert to floating point only on return.

Sign conventions: one printed form of the family circulates with the
hypergeometric argument negated (-s/2 instead of +s/2).  Both are
implemented (zeta_family vs zeta_family_hyp_form) and the Mellin
quadrature in the xi module adjudicates numerically which one satisfies
the integral identity; see also special_value_even/_neg(sign=...).
"""

from __future__ import annotations

import cmath
import math
import warnings
from fractions import Fraction

from ._util import CompensatedSum
from .errors import PoleError, UnverifiedDomainWarning
from .hyper import hermite_mellin_poly, hyp2f1_terminating, d_hyp2f1_ds
from .special import POLE_TOL, bernoulli, digamma, gamma_complex

_LN2 = math.log(2.0)

# Euler-Maclaurin truncation: direct terms and Bernoulli corrections.
# Rigorous remainder below 1e-20 for |Im s| <= 60, Re s > -2.
_EM_N = 40
_EM_M = 25

# Switch to Euler-Maclaurin when |1 - 2^(1-s)| drops below this; the eta
# route would amplify rounding by the reciprocal of that factor.
_ETA_FACTOR_FLOOR = 0.05

_borwein_cache: dict[int, tuple[float, ...]] = {}


def _borwein_weights(n: int) -> tuple[float, ...]:
    """(d_k - d_n)/d_n for the accelerated alternating series, exact ints."""
    w = _borwein_cache.get(n)
    if w is None:
        d = []
        acc = Fraction(0)
        for i in range(n + 1):
            acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
            d.append(n * acc)
        dn = d[n]
        w = tuple(float(Fraction(dk - dn, dn)) for dk in d[:n])
        _borwein_cache[n] = w
    return w


def _eta_term_count(s: complex) -> int:
    # ~0.765 digits per term; e^(pi |t| / 2) growth in the error bound.
    t = abs(s.imag)
    digits = 17.0 + 0.6822 * t + math.log10(1.0 + 2.0 * t) + 4.0 * max(0.0, 0.5 - s.real)
    return min(250, max(24, int(digits / 0.765) + 6))


def _zeta_eta(s: complex) -> complex:
    n = _eta_term_count(s)
    w = _borwein_weights(n)
    acc = CompensatedSum()
    sign = 1.0
    for k in range(n):
        acc.add(sign * w[k] * cmath.exp(-s * math.log(k + 1)))
        sign = -sign
    return -acc.value / (1.0 - cmath.exp(_LN2 * (1.0 - s)))


def _zeta_eta_deriv(s: complex) -> complex:
    # d/ds of the accelerated series and of the eta prefactor.
    n = _eta_term_count(s)
    w = _borwein_weights(n)
    sum_acc = CompensatedSum()
    dsum_acc = CompensatedSum()
    sign = 1.0
    for k in range(n):
        ln_k1 = math.log(k + 1)
        term = sign * w[k] * cmath.exp(-s * ln_k1)
        sum_acc.add(term)
        dsum_acc.add(-ln_k1 * term)
        sign = -sign
    f = 1.0 - cmath.exp(_LN2 * (1.0 - s))
    df = _LN2 * cmath.exp(_LN2 * (1.0 - s))
    sval = sum_acc.value
    return -dsum_acc.value / f + sval * df / (f * f)


def _zeta_em(s: complex, want_deriv: bool = False) -> complex:
    """Euler-Maclaurin summation, valid on Re s > -2 (used for |Re s| < 3/2).

    With want_deriv, returns d zeta/ds via term-wise differentiation.
    """
    N, M = _EM_N, _EM_M
    lnN = math.log(N)
    npow = cmath.exp(-s * lnN)  # N^-s
    acc = CompensatedSum()
    for j in range(1, N):
        lnj = math.log(j)
        t = cmath.exp(-s * lnj)
        acc.add((-lnj * t) if want_deriv else t)
    if not want_deriv:
        acc.add(0.5 * npow)
        acc.add(N * npow / (s - 1.0))
    else:
        acc.add(-0.5 * lnN * npow)
        acc.add(N * npow * (-lnN / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0))))
    # Bernoulli corrections B_2k/(2k)! * (s)_(2k-1) * N^(1-s-2k)
    prod = 1.0 + 0.0j  # (s)_(2k-1), grown incrementally
    dprod = 0.0 + 0.0j
    i = 0
    for k in range(1, M + 1):
        while i < 2 * k - 1:
            dprod = dprod * (s + i) + prod
            prod = prod * (s + i)
            i += 1
        coef = float(bernoulli(2 * k) / math.factorial(2 * k))
        scale = coef * N ** (1 - 2 * k)
        if not want_deriv:
            acc.add(scale * prod * npow)
        else:
            acc.add(scale * (dprod - lnN * prod) * npow)
    return acc.value


def _reflection_factor(s: complex) -> tuple[complex, complex]:
    """chi(s) with zeta(s) = chi(s) zeta(1-s), and chi'(s).

    chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s).  The derivative keeps
    sin and cos separate so trivial-zero points never form 0 * inf.
    """
    base = cmath.exp(s * _LN2 + (s - 1.0) * math.log(math.pi))
    g = gamma_complex(1.0 - s)
    sn = cmath.sin(math.pi * s / 2.0)
    cs = cmath.cos(math.pi * s / 2.0)
    chi = base * sn * g
    dchi = base * g * (math.log(2.0 * math.pi) * sn + (math.pi / 2.0) * cs - digamma(1.0 - s) * sn)
    return chi, dchi


def zeta(s: complex) -> complex:
    """Riemann zeta for complex s != 1; relative error ~1e-13 for |Im s| <= 50."""
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta pole at s = 1")
    if s.imag == 0.0 and s.real < 0.0 and s.real == 2.0 * round(s.real / 2.0):
        return 0.0 + 0.0j  # trivial zero, exact
    if s.real >= 0.5:
        if abs(1.0 - cmath.exp(_LN2 * (1.0 - s))) < _ETA_FACTOR_FLOOR:
            return _zeta_em(s)
        return _zeta_eta(s)
    if s.real > -0.5:
        return _zeta_em(s)
    chi, _ = _reflection_factor(s)
    return chi * zeta(1.0 - s)


def zeta_deriv(s: complex) -> complex:
    """d zeta/ds by branch-wise analytic differentiation (no differencing)."""
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta pole at s = 1")
    if s.real >= 0.5:
        if abs(1.0 - cmath.exp(_LN2 * (1.0 - s))) < _ETA_FACTOR_FLOOR:
            return _zeta_em(s, want_deriv=True)
        return _zeta_eta_deriv(s)
    if s.real > -0.5:
        return _zeta_em(s, want_deriv=True)
    chi, dchi = _reflection_factor(s)
    return dchi * zeta(1.0 - s) - chi * zeta_deriv(1.0 - s)


def _c_factor(q: int) -> float:
    # (-1)^q (2q)!/q!, the Hermite value H_2q(0)
    return (-1) ** q * math.factorial(2 * q) / math.factorial(q)


def zeta_family(q: int, ell: int, s: complex) -> complex:
    """(2q)! zeta(s - ell) * hermite_mellin_poly(q, s).

    Pole at s = 1 + ell.  Odd ell evaluates fine but sits outside the
    hypotheses of the Mellin-transform theorem (which needs 2q + ell even),
    so it carries an UnverifiedDomainWarning.
    """
    s = complex(s)
    if abs(s - (1.0 + ell)) <= POLE_TOL:
        raise PoleError(f"zeta_family pole at s = 1 + ell = {1 + ell}")
    if ell % 2 == 1:
        warnings.warn(
            f"ell={ell} is odd: outside the parity hypotheses of the Mellin theorem",
            UnverifiedDomainWarning,
            stacklevel=2,
        )
    return math.factorial(2 * q) * zeta(s - ell) * hermite_mellin_poly(q, s)


def zeta_family_hyp_form(q: int, s: complex, sign: int = -1) -> complex:
    """c_q 2F1(-q, sign*s/2; 1/2; 2) zeta(s).

    sign=-1 is the alternate printed convention this operation exists to
    test; sign=+1 reproduces zeta_family(q, 0, s).  The Mellin quadrature
    decides which one satisfies the integral identity (the +s/2 form does;
    the -s/2 form is retained, flagged, for the adjudication suite).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta pole at s = 1")
    return _c_factor(q) * hyp2f1_terminating(q, sign * s / 2.0, 0.5, 2.0) * zeta(s)


def _hyp2f1_rational(q: int, b: Fraction, c: Fraction, z: Fraction) -> Fraction:
    term = Fraction(1)
    total = Fraction(1)
    for k in range(q):
        term *= Fraction(k - q) * (b + k) * z / ((c + k) * (k + 1))
        total += term
    return total


def special_value_even(q: int, m: int, sign: int = 1) -> tuple[Fraction, int]:
    """Family value at s = 2m as an exact (coefficient, pi power) pair.

    Returns (r, 2m) meaning r * pi^(2m), with
    r = c_q 2F1(-q, sign*m; 1/2; 2) * 2^(2m) (-1)^(m+1) B_2m / (2 (2m)!)
    in exact rationals.  sign=+1 matches zeta_family(q, 0, 2m); sign=-1 is
    the alternate printed convention.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    cq = Fraction((-1) ** q * math.factorial(2 * q), math.factorial(q))
    hyp = _hyp2f1_rational(q, Fraction(sign * m), Fraction(1, 2), Fraction(2))
    zeta_2m = Fraction(2) ** (2 * m) * (-1) ** (m + 1) * bernoulli(2 * m) / (2 * math.factorial(2 * m))
    return cq * hyp * zeta_2m, 2 * m


def special_value_even_float(q: int, m: int, sign: int = 1) -> complex:
    r, p = special_value_even(q, m, sign)
    return complex(float(r) * math.pi**p)


def special_value_neg(q: int, n: int, sign: int = 1) -> Fraction:
    """Family value at s = -n, exact rational.

    c_q 2F1(-q, -sign*n/2; 1/2; 2) * (-1)^n B_(n+1) / (n+1).  Vanishes for
    even n >= 2 (trivial zeros); n = 0 gives -c_q/2 under the B_1 = -1/2
    convention.  sign as in special_value_even.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    cq = Fraction((-1) ** q * math.factorial(2 * q), math.factorial(q))
    hyp = _hyp2f1_rational(q, Fraction(-sign * n, 2), Fraction(1, 2), Fraction(2))
    return cq * hyp * (-1) ** n * bernoulli(n + 1) / (n + 1)


def zeta_family_deriv(q: int, s: complex) -> complex:
    """d/ds of zeta_family(q, 0, s): product rule on the c_q 2F1 zeta form."""
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta pole at s = 1")
    cq = _c_factor(q)
    hyp = hyp2f1_terminating(q, s / 2.0, 0.5, 2.0)
    return cq * (hyp * zeta_deriv(s) + zeta(s) * d_hyp2f1_ds(q, s))
