"""Implicit zero-locus curves and the quartic analysis."""

from fractions import Fraction

import pytest

from overpoly.curves import (BivarPoly, CURVE_CATALOG, EXTRA_CURVES,
                             cassini_check, check_curve_catalog,
                             check_family_on_curve, curve_samples,
                             derive_curve, extremal_moduli_f12,
                             inversion_check, inversion_image, membership,
                             param_f12, q1_family, tangent_points_f12,
                             verify_param)
from overpoly.polyring import UniPoly
from overpoly.zeros import zeros_explicit_zz, zeros_explicit_zz2


class TestBivarPoly:
    def test_normalization_strips_content_and_sign(self):
        assert BivarPoly.parse("-2*x - 4*y") == BivarPoly.parse("x + 2*y")
        assert BivarPoly.parse("6 + 9*x") == BivarPoly.parse("2 + 3*x")

    def test_eval(self):
        f = BivarPoly.parse("x^2 + y^2 - 1")
        assert f.eval_exact(Fraction(3, 5), Fraction(4, 5)) == 0
        assert abs(f.eval_at(0.6, 0.8)) < 1e-15
        assert f.total_degree() == 2


class TestDeriveCurve:
    def test_catalogue(self):
        check_curve_catalog().require()

    def test_simplest_cases(self):
        # alpha=1, beta=0: the line x = -1.
        assert derive_curve(1, 0) == BivarPoly.parse("1 + x")
        # alpha=1, beta=1: circle centered at -2/3 with radius 1/3, scaled.
        assert derive_curve(1, 1) == BivarPoly.parse("1+4*x+3*x^2+3*y^2")

    def test_rejects_origin_pair(self):
        with pytest.raises(ValueError):
            derive_curve(0, 0)

    def test_negative_index_case(self):
        assert derive_curve(-1, 1) == BivarPoly.parse(EXTRA_CURVES[(-1, 1)])

    def test_catalog_degrees(self):
        for (a, b), (text, _genus) in CURVE_CATALOG.items():
            assert derive_curve(a, b).total_degree() == \
                BivarPoly.parse(text).total_degree()


class TestFamilyOnCurve:
    def test_q1_family_values(self):
        # (1,1) collapses Q_n(1,y,z) onto the z-diagonal specialization.
        from overpoly.specializations import Q1
        for n in range(6):
            assert q1_family(n, 1, 1) == Q1(n, 1, 1)
            assert q1_family(n, 1, 2) == Q1(n, 1, 2)

    def test_q1_family_negative_exponents(self):
        p = q1_family(3, -1, 1)
        assert p.degree >= 1 and p[0] != 0

    @pytest.mark.parametrize("ab", [(1, 1), (1, 2), (0, 1), (2, 1), (-1, 1)])
    def test_roots_lie_on_curve(self, ab):
        check_family_on_curve(*ab, n=12).require()

    def test_explicit_zero_membership(self):
        f11 = derive_curve(1, 1)
        membership(f11, zeros_explicit_zz(15), 1e-10).require()
        f12 = derive_curve(1, 2)
        membership(f12, zeros_explicit_zz2(15), 1e-8).require()


class TestQuarticF12:
    def test_parametrization_exact(self):
        verify_param().require()

    def test_param_point_values(self):
        assert param_f12(Fraction(0)) == (Fraction(0), Fraction(1))
        x, y = param_f12(Fraction(1, 7))
        assert derive_curve(1, 2).eval_exact(x, y) == 0

    def test_param_defined_at_rationals(self):
        # The poles of the parametrization are irrational, so every rational
        # parameter yields an exact point on the curve.
        f12 = derive_curve(1, 2)
        for t in (Fraction(-1, 2), Fraction(2, 3), Fraction(5)):
            x, y = param_f12(t)
            assert f12.eval_exact(x, y) == 0

    def test_tangent_points(self):
        tangent_points_f12().require()

    def test_extremal_moduli(self):
        extremal_moduli_f12(grid=50001).require()


class TestInversion:
    @pytest.mark.parametrize("ab", [(1, 1), (1, 2), (1, 0), (2, 1)])
    def test_inversion_pairing(self, ab):
        inversion_check(*ab).require()

    def test_inversion_image_relation(self):
        img, rel = inversion_image(1, 2)
        assert rel in ("equal", "factor")
        if rel == "equal":
            assert img == derive_curve(1, 2)

    def test_alpha_zero_case(self):
        # alpha = 0: inversion relates the (beta, beta) curve to (0, beta).
        inversion_check(0, 1).require()


def test_cassini_form():
    cassini_check().require()


def test_curve_samples_lie_on_curve():
    for ab in ((1, 2), (1, 1)):
        f = derive_curve(*ab)
        pts = curve_samples(*ab, 24)
        assert pts
        for x, y in pts:
            assert abs(f.eval_at(x, y)) < 1e-7 * (1 + f.norm1())
