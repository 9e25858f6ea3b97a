"""Foundational scalar special functions.

Complex gamma/digamma, exact Bernoulli numbers, unsigned Stirling numbers
of the first kind, physicists' Hermite polynomials, Pochhammer symbols and
double factorials.  Everything downstream builds on these.

Complex arguments are plain Python ``complex``; exact rationals are
``fractions.Fraction``.  All functions are pure; the Bernoulli and Stirling
caches grow under a lock and entries are immutable once published, so
results do not depend on call order.

Stirling convention: we store the *unsigned* numbers c(n, k) defined by the
rising factorial z(z+1)...(z+n-1) = sum_k c(n, k) z^k.  The signed numbers
attached to the falling factorial are (-1)^(n-k) c(n, k); keep the two
straight when comparing against tables.
"""

from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction

from .errors import DomainError, PoleError

POLE_TOL = 1e-12

# Max Re(log Gamma) before Gamma overflows IEEE doubles.
_LOG_OVERFLOW = 709.0

# Lanczos coefficients for g = 607/128, truncated rational approximation
# good to ~1e-15 relative on the right half-plane.
_LANCZOS_SHIFT = 671.0 / 128.0  # g + 1/2
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COEF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_TWO_PI = 2.5066282746310005


def _nearest_nonpositive_int(s: complex) -> int | None:
    """Index n <= 0 with |s - n| <= POLE_TOL, or None."""
    n = round(s.real)
    if n > 0:
        return None
    if abs(complex(s) - n) <= POLE_TOL:
        return n
    return None


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 0.5
    t = z + _LANCZOS_SHIFT
    ser = _LANCZOS_C0
    for j, c in enumerate(_LANCZOS_COEF, start=1):
        ser += c / (z + j)
    return (z + 0.5) * cmath.log(t) - t + cmath.log(_SQRT_TWO_PI * ser / z)


def log_gamma(s: complex) -> complex:
    """log Gamma(s); imaginary part is not branch-normalized for Re s < 1/2.

    Consumers exponentiate or take real parts, so only exp(log_gamma) and
    Re(log_gamma) are contractual.
    """
    s = complex(s)
    if _nearest_nonpositive_int(s) is not None:
        raise PoleError(f"gamma pole at s={s}")
    if s.real >= 0.5:
        return _lanczos_log_gamma(s)
    # reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return cmath.log(math.pi) - cmath.log(cmath.sin(math.pi * s)) - _lanczos_log_gamma(1.0 - s)


def gamma_complex(s: complex) -> complex:
    """Gamma(s) for complex s, relative error ~1e-13 for |s| <= 50.

    Raises PoleError within 1e-12 of a non-positive integer and
    OverflowError when |Gamma(s)| exceeds the double range.
    """
    lg = log_gamma(s)
    if lg.real > _LOG_OVERFLOW:
        raise OverflowError(f"|Gamma({s})| overflows double precision")
    return cmath.exp(lg)


# Digamma asymptotic tail: psi(z) ~ ln z - 1/(2z) - sum B_2k / (2k z^2k).
_DIGAMMA_SHIFT = 16.0
_DIGAMMA_TERMS = 8


def digamma(s: complex) -> complex:
    """psi(s) = Gamma'(s)/Gamma(s), accurate to ~1e-13."""
    s = complex(s)
    if _nearest_nonpositive_int(s) is not None:
        raise PoleError(f"digamma pole at s={s}")
    if s.real < 0.5:
        # psi(s) = psi(1-s) - pi cot(pi s)
        return digamma(1.0 - s) - math.pi * cmath.cos(math.pi * s) / cmath.sin(math.pi * s)
    acc = 0.0 + 0.0j
    z = s
    while z.real < _DIGAMMA_SHIFT:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    # Horner over the B_2k/(2k) coefficients, highest order first
    for k in range(_DIGAMMA_TERMS, 0, -1):
        coef = float(bernoulli(2 * k) / (2 * k))
        tail = (tail + coef) * w
    return acc + cmath.log(z) - 0.5 / z - tail


_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise DomainError("bernoulli index must be >= 0")
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            acc = Fraction(0)
            for k in range(m):
                acc += math.comb(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-acc / (m + 1))
        return _bernoulli_cache[n]


_stirling_cache: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling_first_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k).

    Defined by the rising factorial: (z)_n = sum_k c(n, k) z^k, so
    c(n, 1) = (n-1)! and c(n, n) = 1.
    """
    if n < 0 or k < 0:
        raise DomainError("stirling indices must be >= 0")
    if k > n:
        raise DomainError(f"stirling_first_unsigned requires k <= n, got ({n}, {k})")
    with _stirling_lock:
        while len(_stirling_cache) <= n:
            m = len(_stirling_cache)
            prev = _stirling_cache[m - 1]
            row = [0] * (m + 1)
            for j in range(1, m + 1):
                row[j] = prev[j - 1] + (m - 1) * (prev[j] if j < m else 0)
            _stirling_cache.append(row)
        return _stirling_cache[n][k]


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by three-term recurrence.

    H_{n+1} = 2x H_n - 2n H_{n-1}.  The recurrence preserves the argument
    type: floats and complex evaluate numerically, exact types (int,
    Fraction) evaluate exactly.
    """
    if n < 0:
        raise DomainError("hermite degree must be >= 0")
    h0 = x * 0 + 1
    if n == 0:
        return h0
    h1 = 2 * x
    for k in range(1, n):
        h0, h1 = h1, 2 * x * h1 - 2 * k * h0
    if isinstance(h1, complex):
        if not (math.isfinite(h1.real) and math.isfinite(h1.imag)):
            raise OverflowError(f"hermite({n}, {x}) overflowed")
    elif isinstance(h1, float) and not math.isfinite(h1):
        raise OverflowError(f"hermite({n}, {x}) overflowed")
    return h1


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1 exactly."""
    if n < 0:
        raise DomainError("pochhammer order must be >= 0")
    result = 1
    for k in range(n):
        result = result * (a + k)
    return result


def double_factorial(n: int) -> int:
    """n!! with the empty-product conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise DomainError("double factorial needs n >= -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result
