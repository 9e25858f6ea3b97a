"""Foundational scalar functions: gamma, digamma, Bernoulli, Stirling,
Hermite, Pochhammer, double factorial."""

import math
import cmath
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from xiforge.errors import DomainError, PoleError
from xiforge.special import (
    bernoulli,
    digamma,
    double_factorial,
    gamma_complex,
    hermite,
    pochhammer,
    stirling_first_unsigned,
)

from oracles import oracle_digamma, oracle_gamma, oracle_zeta_dirichlet

# frozen via oracle_gamma (Stirling-Binet, 50 digits)
GAMMA_HALF_P_1413I = complex(-1.52582844418176695e-10, -5.545273364437488548e-10)
EULER_GAMMA = 0.5772156649015328606


def rel_err(a, b):
    return abs(a - b) / abs(b)


class TestGamma:
    def test_factorial_anchor(self):
        assert abs(gamma_complex(1.0) - 1.0) < 1e-15
        assert abs(gamma_complex(5.0) - 24.0) < 1e-13 * 24

    def test_half(self):
        assert rel_err(gamma_complex(0.5), math.sqrt(math.pi)) < 1e-14

    def test_critical_strip_point_frozen(self):
        got = gamma_complex(0.5 + 14.13j)
        assert rel_err(abs(got), abs(GAMMA_HALF_P_1413I)) < 1e-12
        assert rel_err(got, GAMMA_HALF_P_1413I) < 1e-12

    @pytest.mark.parametrize("s", [2.5, -2.5, 3 - 4j, 0.25, -0.5 + 3j, 10 + 10j, 48.5, 0.5 + 49j])
    def test_against_oracle(self, s):
        assert rel_err(gamma_complex(s), complex(oracle_gamma(s))) < 1e-13

    @pytest.mark.parametrize("s", [0.0, -1.0, -7.0, -3.0 + 1e-13j, 1e-13])
    def test_pole_error(self, s):
        with pytest.raises(PoleError):
            gamma_complex(s)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            gamma_complex(200.0)

    @settings(max_examples=150, deadline=None)
    @given(st.complex_numbers(max_magnitude=20.0, allow_nan=False, allow_infinity=False))
    def test_reflection_identity(self, s):
        # stay off the pole lattice of either factor
        if abs(s.imag) < 0.05 and abs(s.real - round(s.real)) < 0.05:
            return
        lhs = gamma_complex(s) * gamma_complex(1.0 - s) * cmath.sin(math.pi * s) / math.pi
        assert abs(lhs - 1.0) < 1e-12


class TestDigamma:
    def test_unit_increment(self):
        assert abs((digamma(2.0) - digamma(1.0)) - 1.0) < 1e-13

    def test_euler_gamma_frozen(self):
        assert abs(digamma(1.0) - (-EULER_GAMMA)) < 1e-13
        assert abs(digamma(1.0) - complex(oracle_digamma(1))) < 1e-13

    def test_half_via_duplication(self):
        # psi(2z) = (psi(z) + psi(z + 1/2))/2 + ln 2 at z = 1/2 forces
        # psi(1/2) = psi(1) - 2 ln 2
        target = digamma(1.0) - 2.0 * math.log(2.0)
        assert abs(digamma(0.5) - target) < 1e-13
        assert abs(digamma(0.5) - (-EULER_GAMMA - 2 * math.log(2))) < 1e-13

    def test_duplication_identity_generic(self):
        for z in [0.7, 1.3 + 0.8j, 3.2 - 1.1j]:
            lhs = digamma(2 * z)
            rhs = 0.5 * (digamma(z) + digamma(z + 0.5)) + math.log(2.0)
            assert abs(lhs - rhs) < 1e-12

    @settings(max_examples=150, deadline=None)
    @given(st.complex_numbers(max_magnitude=15.0, allow_nan=False, allow_infinity=False))
    def test_recurrence(self, s):
        if abs(s.imag) < 0.05 and abs(s.real - round(s.real)) < 0.05:
            return
        assert abs(digamma(s + 1.0) - digamma(s) - 1.0 / s) < 1e-13 * max(1.0, abs(digamma(s)))

    def test_pole(self):
        with pytest.raises(PoleError):
            digamma(-4.0)


class TestBernoulli:
    def test_small_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_vanish(self):
        for n in range(3, 30, 2):
            assert bernoulli(n) == 0

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_zeta_bridge(self, m):
        closed = (2 * math.pi) ** (2 * m) * abs(bernoulli(2 * m)) / (2 * math.factorial(2 * m))
        direct = complex(oracle_zeta_dirichlet(2 * m)).real
        assert abs(closed - direct) < 1e-12 * direct

    def test_thread_consistency(self):
        with ThreadPoolExecutor(8) as pool:
            results = list(pool.map(bernoulli, [40] * 16))
        assert len(set(results)) == 1


class TestStirling:
    def test_diagonal(self):
        for n in range(13):
            assert stirling_first_unsigned(n, n) == 1

    def test_hand_expanded_cubic(self):
        # z(z+1)(z+2) = z^3 + 3z^2 + 2z
        assert stirling_first_unsigned(3, 1) == 2
        assert stirling_first_unsigned(3, 2) == 3

    def test_first_column_factorial(self):
        for n in range(1, 10):
            assert stirling_first_unsigned(n, 1) == math.factorial(n - 1)

    def test_domain(self):
        with pytest.raises(DomainError):
            stirling_first_unsigned(3, 4)
        with pytest.raises(DomainError):
            stirling_first_unsigned(-1, 0)

    def test_rising_factorial_expansion_exact(self):
        # both sides are polynomials with integer coefficients: evaluate
        # at exact rational points and demand exact equality
        rng = random.Random(2024)
        for _ in range(50):
            z = Fraction(rng.randint(-8000, 8000), 1000)
            for n in range(13):
                poly = sum(stirling_first_unsigned(n, k) * z**k for k in range(n + 1))
                assert poly == pochhammer(z, n)

    def test_rising_factorial_expansion_float(self):
        # floating spot check away from the alternating-sign cancellation
        rng = random.Random(2025)
        for _ in range(50):
            z = rng.uniform(0.1, 8.0)
            for n in range(13):
                poly = sum(stirling_first_unsigned(n, k) * z**k for k in range(n + 1))
                direct = pochhammer(z, n)
                assert abs(poly - direct) <= 1e-10 * max(1.0, abs(direct))


class TestHermite:
    def test_constant(self):
        assert hermite(0, 3.7) == 1.0

    def test_h2_at_3(self):
        # 4x^2 - 2 from the recurrence
        assert hermite(2, 3.0) == 34.0

    @pytest.mark.parametrize("q", range(9))
    def test_even_order_at_zero(self, q):
        want = (-1) ** q * math.factorial(2 * q) // math.factorial(q)
        assert hermite(2 * q, 0) == want

    def test_parity_exact(self):
        for n in range(11):
            for x in [Fraction(3, 7), Fraction(-12, 5), 4]:
                assert hermite(n, -x) == (-1) ** n * hermite(n, x)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 25), st.floats(-30, 30, allow_nan=False))
    def test_parity_float(self, n, x):
        a, b = hermite(n, -x), (-1) ** n * hermite(n, x)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))

    def test_overflow(self):
        with pytest.raises(OverflowError):
            hermite(300, 1e3)


class TestPochhammerDoubleFactorial:
    def test_empty_products(self):
        assert pochhammer(2.7 + 1j, 0) == 1
        assert double_factorial(-1) == 1
        assert double_factorial(0) == 1

    def test_factorial_identity(self):
        for n in range(9):
            assert pochhammer(1, n) == math.factorial(n)

    def test_half_squared(self):
        assert pochhammer(0.5, 2) == 0.75

    def test_small_double_factorials(self):
        assert double_factorial(5) == 15
        assert double_factorial(8) == 384

    @pytest.mark.parametrize("q", range(11))
    def test_double_factorial_ratio(self, q):
        assert double_factorial(2 * q - 1) == math.factorial(2 * q) // (2**q * math.factorial(q))
