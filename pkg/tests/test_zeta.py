"""Zeta engine: accelerated eta series, reflection, the family, special values."""

import cmath
import math
import random
from fractions import Fraction

import pytest

from xiforge.errors import PoleError, UnverifiedDomainWarning
from xiforge.special import gamma_complex
from xiforge.zeta import (
    special_value_even,
    special_value_even_float,
    special_value_neg,
    zeta,
    zeta_deriv,
    zeta_family,
    zeta_family_deriv,
    zeta_family_hyp_form,
)

from oracles import oracle_zeta_dirichlet

SEED = 424242


class TestZeta:
    def test_basel_anchor(self):
        assert abs(zeta(2.0) - math.pi**2 / 6.0) < 1e-12
        assert abs(zeta(2.0) - complex(oracle_zeta_dirichlet(2))) < 1e-12

    def test_value_at_zero(self):
        assert abs(zeta(0.0) - (-0.5)) < 1e-13

    def test_trivial_zeros_exact(self):
        for m in (1, 2, 3, 5):
            assert zeta(-2.0 * m) == 0.0

    def test_neg_one(self):
        assert abs(zeta(-1.0) - (-1.0 / 12.0)) < 1e-13

    def test_pole(self):
        with pytest.raises(PoleError):
            zeta(1.0)
        with pytest.raises(PoleError):
            zeta(1.0 + 5e-13j)

    def test_against_dirichlet_oracle_right_half(self):
        rng = random.Random(SEED)
        for _ in range(25):
            s = complex(rng.uniform(1.5, 8.0), rng.uniform(-40.0, 40.0))
            ref = complex(oracle_zeta_dirichlet(s))
            assert abs(zeta(s) - ref) <= 1e-12 * abs(ref)

    def test_completed_functional_equation(self):
        rng = random.Random(SEED + 1)
        checked = 0
        while checked < 100:
            s = complex(rng.uniform(-30, 30), rng.uniform(-30, 30))
            if abs(s) > 30 or abs(s - 1) < 0.1 or abs(s) < 0.1:
                continue
            if abs(s.imag) < 0.1 and s.real < 0 and abs(s.real / 2 - round(s.real / 2)) < 0.05:
                continue  # trivial zeros: both sides vanish, ratio meaningless
            lhs = math.pi ** 0 * cmath.exp(-s / 2 * cmath.log(math.pi)) * gamma_complex(s / 2) * zeta(s)
            u = 1.0 - s
            rhs = cmath.exp(-u / 2 * cmath.log(math.pi)) * gamma_complex(u / 2) * zeta(u)
            assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), abs(rhs)), s
            checked += 1

    def test_eta_prefactor_zero_fallback(self):
        # 1 - 2^(1-s) vanishes at s = 1 + 2 pi i k / ln 2; the strip there
        # must reroute through Euler-Maclaurin and stay accurate
        s = complex(1.0, 2.0 * math.pi / math.log(2.0))
        ref = complex(oracle_zeta_dirichlet(s, n_terms=200000))
        assert abs(zeta(s) - ref) <= 1e-11 * abs(ref)


class TestZetaDeriv:
    def test_at_zero(self):
        assert abs(zeta_deriv(0.0) - (-0.5 * math.log(2 * math.pi))) < 1e-12

    def test_trivial_zero_slope(self):
        # zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2 pi)^(2n))
        for n in (1, 2):
            want = (-1) ** n * math.factorial(2 * n) * zeta(2 * n + 1.0) / (2 * (2 * math.pi) ** (2 * n))
            assert abs(zeta_deriv(-2.0 * n) - want) < 1e-12 * abs(want)

    def test_central_differences(self):
        rng = random.Random(SEED + 2)
        h = 1e-6
        checked = 0
        while checked < 50:
            s = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
            if abs(s - 1) < 0.1 or abs(s.real - 0.5) < 0.01 or abs(abs(s.real) - 0.5) < 0.01:
                continue  # keep the difference stencil inside one branch
            fd = (zeta(s + h) - zeta(s - h)) / (2 * h)
            assert abs(zeta_deriv(s) - fd) <= 1e-6 * max(1.0, abs(fd)), s
            checked += 1


class TestZetaFamily:
    def test_collapses_to_zeta(self):
        for s in [2.5, 0.3 + 3j, -1.7]:
            assert abs(zeta_family(0, 0, s) - zeta(s)) < 1e-13 * max(1.0, abs(zeta(s)))

    def test_q1_at_two(self):
        # 2! zeta(2) (2*2 - 1) = pi^2
        assert abs(zeta_family(1, 0, 2.0) - math.pi**2) < 1e-12

    def test_trivial_zeros(self):
        for m in range(1, 6):
            assert zeta_family(0, 0, complex(-2.0 * m)) == 0.0

    def test_pole_shifted_by_ell(self):
        with pytest.raises(PoleError):
            zeta_family(1, 2, 3.0)

    def test_odd_ell_flagged(self):
        with pytest.warns(UnverifiedDomainWarning):
            zeta_family(1, 1, 3.0)

    def test_hyp_form_sign_conventions(self):
        rng = random.Random(SEED + 3)
        for q in (1, 2, 3):
            for _ in range(20):
                s = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
                if abs(s - 1) < 0.2:
                    continue
                plus = zeta_family_hyp_form(q, s, sign=+1)
                fam = zeta_family(q, 0, s)
                assert abs(plus - fam) <= 1e-11 * max(1.0, abs(fam))
        # the printed -s/2 variant is a genuinely different function
        assert abs(zeta_family_hyp_form(1, 2.0, sign=-1) - zeta_family(1, 0, 2.0)) > 1.0


class TestSpecialValues:
    def test_even_anchors(self):
        assert abs(special_value_even_float(0, 1) - math.pi**2 / 6) < 1e-12
        assert abs(special_value_even_float(0, 2) - math.pi**4 / 90) < 1e-12

    def test_even_exact_pair(self):
        coef, power = special_value_even(0, 1)
        assert coef == Fraction(1, 6) and power == 2

    def test_neg_anchors(self):
        assert special_value_neg(0, 1) == Fraction(-1, 12)
        assert special_value_neg(0, 0) == Fraction(-1, 2)

    def test_neg_trivial_zeros(self):
        for m in (1, 2, 3):
            assert special_value_neg(0, 2 * m) == 0

    def test_even_matches_family_default_sign(self):
        for q, m in ((1, 1), (2, 1), (1, 2), (3, 2)):
            fam = zeta_family(q, 0, complex(2 * m))
            assert abs(special_value_even_float(q, m) - fam) <= 1e-12 * max(1.0, abs(fam))

    def test_even_printed_sign_hand_value(self):
        # c_1 2F1(-1,-1;1/2;2) zeta(2) with 2F1 = 1 + 4 = 5: -10 pi^2/6
        got = special_value_even_float(1, 1, sign=-1)
        assert abs(got - (-5.0 * math.pi**2 / 3.0)) < 1e-12

    def test_neg_matches_family_default_sign(self):
        for q, n in ((1, 1), (2, 0), (1, 3), (2, 5)):
            fam = zeta_family(q, 0, complex(-n))
            assert abs(float(special_value_neg(q, n)) - fam) <= 1e-12 * max(1.0, abs(fam))

    def test_neg_n0_consistency_all_q(self):
        # value at the origin: c_q * B_1 forces -c_q/2 and the family agrees
        for q in range(11):
            fam = zeta_family(q, 0, 0.0)
            exact = float(special_value_neg(q, 0))
            assert abs(fam - exact) <= 1e-12 * max(1.0, abs(exact))


class TestFamilyDerivative:
    def test_at_zero(self):
        got = zeta_family_deriv(0, 0.0)
        assert abs(got - (-0.5 * math.log(2 * math.pi))) < 1e-12

    def test_trivial_zero_derivative(self):
        want = -zeta(3.0) / (4 * math.pi**2)
        assert abs(zeta_family_deriv(0, -2.0) - want) < 1e-12 * abs(want)

    @pytest.mark.parametrize("q", [0, 1, 2, 4])
    def test_central_difference(self, q):
        h = 1e-6
        s = 3.0
        fd = (zeta_family(q, 0, s + h) - zeta_family(q, 0, s - h)) / (2 * h)
        an = zeta_family_deriv(q, s)
        assert abs(fd - an) <= 1e-5 * max(1.0, abs(an))
