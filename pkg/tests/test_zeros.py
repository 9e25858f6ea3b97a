"""Critical-line zero location: completeness, parity, simplicity evidence."""

import math

import pytest

from xiforge.errors import CountMismatch, DomainError
from xiforge.hyper import hermite_mellin_poly, laguerre_mellin_poly
from xiforge.zeros import (
    critical_line_section,
    find_zeros,
    verify_exhaustive,
)


class TestSection:
    def test_odd_degree_zero_at_origin(self):
        assert critical_line_section(1, 0.0) == 0.0

    def test_q2_roots_of_hand_expanded_quadratic(self):
        # p_2 on the line: roots of s^2 - s + 3/4 at t = +-sqrt(2)/2
        assert abs(critical_line_section(2, math.sqrt(2) / 2)) < 1e-12

    def test_even_section_even_in_t(self):
        for t in (0.3, 1.7, 5.2):
            assert critical_line_section(4, t) == critical_line_section(4, -t)

    def test_section_is_real_projection(self):
        # even q: the line value is real; odd q: purely imaginary
        for q, t in ((2, 1.3), (6, 0.4)):
            v = hermite_mellin_poly(q, complex(0.5, t))
            assert abs(v.imag) < 1e-13 * max(1.0, abs(v))
        for q, t in ((3, 0.9), (5, 2.1)):
            v = hermite_mellin_poly(q, complex(0.5, t))
            assert abs(v.real) < 1e-13 * max(1.0, abs(v))


class TestFindZeros:
    def test_degree_one(self):
        zeros = find_zeros(1)
        assert len(zeros) == 1 and zeros[0].t == 0.0

    def test_degree_two_ordinate(self):
        zeros = find_zeros(2)
        assert len(zeros) == 1
        assert abs(zeros[0].t - math.sqrt(2) / 2) < 1e-10

    def test_degree_zero_empty(self):
        assert find_zeros(0) == []

    @pytest.mark.parametrize("q", range(1, 13))
    def test_count_and_parity(self, q):
        zeros = find_zeros(q)
        count = sum(1 if r.t == 0.0 else 2 for r in zeros)
        assert count == q
        has_origin = any(r.t == 0.0 for r in zeros)
        assert has_origin == (q % 2 == 1)

    @pytest.mark.parametrize("q", [3, 8, 12])
    def test_refinement_quality(self, q):
        scale = max(1.0, max(abs(critical_line_section(q, 0.5 * k)) for k in range(61)))
        for r in find_zeros(q):
            assert r.bracket_width <= 1e-12
            assert r.residual <= 1e-10 * scale

    @pytest.mark.parametrize("q", [5, 9])
    def test_mirror_ordinates(self, q):
        for r in find_zeros(q):
            mirrored = abs(hermite_mellin_poly(q, complex(0.5, -r.t)))
            assert mirrored <= 1e-10

    def test_simplicity_gap(self):
        for q in (6, 11):
            zeros = find_zeros(q)
            ts = [r.t for r in zeros]
            gaps = [b - a for a, b in zip(ts, ts[1:])]
            assert min(gaps) > 1e-6

    def test_count_mismatch_when_window_too_small(self):
        with pytest.raises(CountMismatch) as info:
            find_zeros(5, t_max=2.0)
        assert info.value.expected == 5
        assert info.value.found < 5

    def test_invalid_inputs(self):
        with pytest.raises(DomainError):
            find_zeros(-1)
        with pytest.raises(DomainError):
            find_zeros(3, grid_step=0.0)


class TestVerifyExhaustive:
    def test_vacuous_degree_zero(self):
        rep = verify_exhaustive(0)
        assert rep.ok and rep.found_with_multiplicity == 0

    def test_mid_degree(self):
        rep = verify_exhaustive(15)
        assert rep.ok
        assert rep.found_with_multiplicity == 15
        assert rep.min_gap is not None and rep.min_gap > 1e-6

    def test_failure_is_reported_not_raised(self):
        rep = verify_exhaustive(5, t_max=2.0)
        assert not rep.ok
        assert "mismatch" in rep.detail


class TestLaguerreZeroCorrespondence:
    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_alpha_half_shift_maps_zero_sets(self, q):
        # the alpha = -1/2 family reproduces the critical-line zeros under
        # s -> s/2 + 1/4, so each ordinate t maps to 1/2 + i t/2
        for r in find_zeros(q):
            v = laguerre_mellin_poly(q, -0.5, complex(0.5, r.t / 2.0))
            assert abs(v) < 1e-9
