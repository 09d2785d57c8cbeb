"""Numerical root-finding and explicit zero formula checks."""

import math

import pytest

from overpoly.polyring import UniPoly
from overpoly.specializations import Q1, Qtilde, Qx
from overpoly.zeros import (ComplexPoint, check_qtilde_circle,
                            check_real_negative_reciprocal, check_zz2_quartic,
                            check_zz_circle, match_distance, roots,
                            rtilde_zero_survey, zeros_explicit_qtilde,
                            zeros_explicit_zz, zeros_explicit_zz2)


def zset(pts):
    return sorted((round(p.re, 9), round(p.im, 9)) for p in pts)


class TestRoots:
    def test_simple_quadratic(self):
        pts = roots(UniPoly([-1, 0, 1]))   # z^2 - 1
        assert zset(pts) == [(-1.0, 0.0), (1.0, 0.0)]

    def test_double_root_multiplicity(self):
        pts = roots(UniPoly([1, 2, 1]))    # (z+1)^2
        assert zset(pts) == [(-1.0, 0.0), (-1.0, 0.0)]

    def test_zero_roots_stripped(self):
        pts = roots(UniPoly([0, 0, -1, 0, 1]))  # z^2 (z^2 - 1)
        assert zset(pts) == [(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]

    def test_complex_pair(self):
        pts = roots(UniPoly([1, 0, 1]))    # z^2 + 1
        assert zset(pts) == [(0.0, -1.0), (0.0, 1.0)]

    def test_rational_coefficients(self):
        from fractions import Fraction
        pts = roots(UniPoly([Fraction(-1, 4), 0, 1]))  # z^2 - 1/4
        assert zset(pts) == [(-0.5, 0.0), (0.5, 0.0)]

    def test_residuals_reported(self):
        for pt in roots(UniPoly([-2, 0, 0, 1])):  # z^3 - 2
            assert isinstance(pt, ComplexPoint)
            assert pt.residual < 1e-10
            assert abs(abs(pt.z) - 2 ** (1 / 3)) < 1e-12

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            roots(UniPoly([5]))
        with pytest.raises(ValueError):
            roots(UniPoly([1, 1]), tol=0)

    def test_large_coefficient_family(self):
        # Coefficients near 3^21 with unit-scale roots: the extended-precision
        # path must still deliver tiny exact residuals.
        p = Q1(20, 1, 2)
        pts = roots(p)
        assert len(pts) == 40
        norm = sum(abs(float(c)) for c in p.coeffs)
        assert all(pt.residual < 1e-8 * norm for pt in pts)


class TestMatchDistance:
    def test_permutation_invariance(self):
        a = [1 + 1j, -2j, 3.0 + 0j]
        b = [3.0 + 0j, 1 + 1j, -2j]
        assert match_distance(a, b) < 1e-15

    def test_reports_worst_pair(self):
        assert abs(match_distance([0j, 1 + 0j], [0.5j, 1 + 0j]) - 0.5) < 1e-15

    def test_length_mismatch_is_infinite(self):
        assert match_distance([0j], [0j, 1j]) == math.inf


class TestExplicitFormulas:
    def test_zz_count_and_residuals(self):
        pts = zeros_explicit_zz(9)
        assert len(pts) == 9
        norm = sum(abs(float(c)) for c in Q1(9, 1, 1).coeffs)
        assert all(p.residual < 1e-10 * norm for p in pts)

    def test_zz_on_circle(self):
        for p in zeros_explicit_zz(14):
            assert abs((p.re + 2 / 3) ** 2 + p.im ** 2 - 1 / 9) < 1e-12

    def test_zz2_count_and_pair_products(self):
        pts = zeros_explicit_zz2(8)
        assert len(pts) == 16
        for j in range(0, 16, 2):
            assert abs(pts[j].z * pts[j + 1].z - 1) < 1e-12

    def test_even_index_double_root_exact(self):
        # At odd n the conjugate-pair index j = (n+1)/2 gives a double root
        # at -1; the formula must hit it exactly rather than split it.
        pts = zeros_explicit_zz2(1)
        assert zset(pts) == [(-1.0, 0.0), (-1.0, 0.0)]

    def test_qtilde_small_case(self):
        # Qtilde(2) = z^2 + 4 z + 8 has roots -2 +/- 2i.
        assert Qtilde(2) == UniPoly([8, 4, 1])
        pts = zeros_explicit_qtilde(2)
        assert zset(pts) == [(-2.0, -2.0), (-2.0, 2.0)]

    def test_validation(self):
        for fn in (zeros_explicit_zz, zeros_explicit_zz2, zeros_explicit_qtilde):
            with pytest.raises(ValueError):
                fn(0)


class TestLocusChecks:
    @pytest.mark.parametrize("n", [1, 2, 7, 12])
    def test_zz_circle(self, n):
        check_zz_circle(n).require()

    @pytest.mark.parametrize("n", [1, 2, 8, 15])
    def test_zz2_quartic(self, n):
        check_zz2_quartic(n).require()

    @pytest.mark.parametrize("n", [1, 2, 9, 12])
    def test_qtilde_circle(self, n):
        check_qtilde_circle(n).require()

    def test_reciprocal_real_negative(self):
        check_real_negative_reciprocal(12).require()

    def test_reciprocal_closure_explicit(self):
        zs = [p.z for p in roots(Qx(6))]
        for z in zs:
            assert min(abs(1 / z - w) for w in zs) < 1e-8

    def test_rtilde_survey(self):
        assert rtilde_zero_survey(1) == []
        survey = rtilde_zero_survey(8)
        assert len(survey) == 6
        # These zeros drift toward the |z + 1/2| = 5/2 circle without
        # landing on it; just check the distances are finite and modest.
        assert all(0 <= d < 2.5 for _pt, d in survey)
