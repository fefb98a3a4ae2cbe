"""Truncated t-series with polynomial coefficients, and the one-point tables."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from hhodge.series import (
    DEFAULT_ORDER,
    ZPoly,
    ZPolySeries,
    extract_line_initial,
    hodge_onepoint,
    hurwitz_hodge_onepoint,
    initial_onepoint,
    pow_z_shift,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    sinc_half,
)

fr = Fraction

# Classical Bernoulli numbers, used as an independent oracle below.
BERNOULLI = {2: fr(1, 6), 4: fr(-1, 30), 6: fr(1, 42), 8: fr(-1, 30), 10: fr(5, 66), 12: fr(-691, 2730)}


def poly(*coeffs):
    return ZPoly(tuple(fr(c) for c in coeffs))


class TestZPoly:
    def test_trailing_zeros_trimmed(self):
        assert poly(1, 2, 0, 0) == poly(1, 2)
        assert poly(0, 0).is_zero()

    def test_degree_and_coeff(self):
        p = poly(3, 0, 5)
        assert p.degree() == 2
        assert p.coeff(1) == 0
        assert p.coeff(2) == 5
        assert p.coeff(9) == 0

    def test_arithmetic(self):
        p, q = poly(1, 1), poly(1, -1)
        assert p + q == poly(2)
        assert p - q == poly(0, 2)
        assert p * q == poly(1, 0, -1)
        assert p.scale(fr(1, 2)) == poly(fr(1, 2), fr(1, 2))

    def test_const(self):
        assert ZPoly.const(7) == poly(7)


class TestSeriesArithmetic:
    def test_product_of_binomials(self):
        one_plus = ZPolySeries(4, (poly(1), poly(1)))
        one_minus = ZPolySeries(4, (poly(1), poly(-1)))
        prod = series_mul(one_plus, one_minus)
        assert prod.coeff(0) == poly(1)
        assert prod.coeff(1).is_zero()
        assert prod.coeff(2) == poly(-1)
        assert prod.coeff(3).is_zero()

    def test_rejects_order_mismatch(self):
        with pytest.raises(ValueError):
            series_mul(ZPolySeries.one(4), ZPolySeries.one(6))

    def test_inverse_of_geometric(self):
        f = ZPolySeries(6, (poly(1), poly(-1)))
        inv = series_inverse(f)
        assert all(inv.coeff(k) == poly(1) for k in range(7))

    def test_inverse_round_trip(self):
        f = sinc_half(3, 10)
        assert series_mul(f, series_inverse(f)) == ZPolySeries.one(10)

    def test_inverse_needs_invertible_constant(self):
        with pytest.raises(ValueError):
            series_inverse(ZPolySeries(4, (poly(0), poly(1))))
        with pytest.raises(ValueError):
            series_inverse(ZPolySeries(4, (poly(1, 1),)))

    def test_log_of_one_plus_t(self):
        f = ZPolySeries(5, (poly(1), poly(1)))
        lg = series_log(f)
        for k in range(1, 6):
            assert lg.coeff(k) == poly(fr((-1) ** (k + 1), k))

    def test_exp_of_t(self):
        f = ZPolySeries(5, (poly(0), poly(1)))
        ex = series_exp(f)
        for k in range(6):
            assert ex.coeff(k) == poly(fr(1, math.factorial(k)))

    def test_exp_log_round_trip(self):
        f = ZPolySeries(8, (poly(1), poly(0), poly(fr(1, 24))))
        assert series_exp(series_log(f)) == f

    def test_log_needs_unit_constant(self):
        with pytest.raises(ValueError):
            series_log(ZPolySeries(4, (poly(2),)))

    def test_exp_needs_zero_constant(self):
        with pytest.raises(ValueError):
            series_exp(ZPolySeries.one(4))


class TestSincHalf:
    def test_unit_scale_coefficients(self):
        f = sinc_half(1, 8)
        assert f.coeff(0) == poly(1)
        assert f.coeff(2) == poly(fr(1, 24))
        assert f.coeff(4) == poly(fr(7, 5760))
        assert f.coeff(6) == poly(fr(31, 967680))

    def test_long_division_oracle(self):
        # sinc_half(1) is the reciprocal of 1 - t^2/24 + t^4/1920 - ...
        denominator = ZPolySeries(
            8,
            (
                poly(1),
                poly(0),
                poly(fr(-1, 24)),
                poly(0),
                poly(fr(1, 1920)),
                poly(0),
                poly(fr(-1, 322560)),
                poly(0),
                poly(fr(1, 92897280)),
            ),
        )
        assert series_mul(sinc_half(1, 8), denominator) == ZPolySeries.one(8)

    @pytest.mark.parametrize("scale", range(1, 7))
    def test_quadratic_term_scales(self, scale):
        assert sinc_half(scale, 4).coeff(2) == poly(fr(scale * scale, 24))

    def test_odd_rows_vanish(self):
        f = sinc_half(5, 11)
        assert all(f.coeff(k).is_zero() for k in range(1, 12, 2))

    def test_rejects_bad_scale(self):
        with pytest.raises(ValueError):
            sinc_half(0, 4)


class TestPowZShift:
    def test_unit_exponent_is_identity(self):
        f = sinc_half(3, 8)
        assert pow_z_shift(f, 1, 0) == f

    def test_zero_exponent_is_one(self):
        assert pow_z_shift(sinc_half(2, 6), 0, 0) == ZPolySeries.one(6)

    def test_needs_unit_constant(self):
        f = ZPolySeries(4, (poly(2),))
        with pytest.raises(ValueError):
            pow_z_shift(f, 1, 1)


class TestHodgeOnePoint:
    def test_low_order_values(self):
        f = hodge_onepoint(12)
        assert f.coeff(0) == poly(1)
        assert f.coeff(2) == poly(fr(1, 24), fr(1, 24))
        assert f.coeff(2, 0) == fr(1, 24)
        assert f.coeff(4, 0) == fr(7, 5760)
        assert f.coeff(6, 0) == fr(31, 967680)

    def test_odd_rows_vanish(self):
        f = hodge_onepoint(9)
        assert all(f.coeff(k).is_zero() for k in range(1, 10, 2))

    @pytest.mark.parametrize("g", range(1, 7))
    def test_top_coefficient_against_bernoulli(self, g):
        # classical closed form for the scalar row of the one-point table
        half_pow = 2 ** (2 * g - 1)
        expected = fr(half_pow - 1, half_pow) * abs(BERNOULLI[2 * g]) / math.factorial(2 * g)
        assert hodge_onepoint(2 * g).coeff(2 * g, 0) == expected

    @pytest.mark.parametrize("g", range(7))
    def test_polynomial_degree_matches_genus(self, g):
        assert hodge_onepoint(12).coeff(2 * g).degree() == g

    def test_default_order(self):
        assert hodge_onepoint().order == DEFAULT_ORDER


class TestHurwitzHodgeOnePoint:
    def test_constant_term(self):
        for n_root in (1, 2, 3, 5):
            assert hurwitz_hodge_onepoint(n_root, 6).coeff(0) == poly(fr(1, n_root))

    def test_collapses_at_one(self):
        assert hurwitz_hodge_onepoint(1, 16) == hodge_onepoint(16)

    def test_first_stacky_row(self):
        assert hurwitz_hodge_onepoint(2, 4).coeff(2, 1) == fr(1, 12)

    def test_rejects_bad_root_order(self):
        with pytest.raises(ValueError):
            hurwitz_hodge_onepoint(0, 4)


class TestInitialOnePoint:
    def test_scalar_row_vanishes(self):
        f = initial_onepoint(3, 12)
        assert all(f.coeff(k, 0) == 0 for k in range(13))

    @pytest.mark.parametrize("n_root", range(2, 6))
    def test_leading_value(self, n_root):
        expected = fr(n_root * n_root - 1, 24 * n_root)
        assert initial_onepoint(n_root, 4).coeff(2, 1) == expected

    def test_vanishes_at_root_order_one(self):
        f = initial_onepoint(1, 10)
        assert f == ZPolySeries.zero(10)

    @pytest.mark.parametrize("n_root", range(1, 7))
    def test_difference_route_agrees(self, n_root):
        # second route: subtract the untwisted table from the twisted one
        direct = initial_onepoint(n_root, 20)
        diff = hurwitz_hodge_onepoint(n_root, 20) - hodge_onepoint(20).scale(fr(1, n_root))
        assert direct == diff


class TestExtractLineInitial:
    def test_known_values(self):
        assert extract_line_initial(2, 1) == fr(1, 16)
        assert extract_line_initial(3, 1) == fr(1, 9)
        assert extract_line_initial(2, 2) == fr(1, 192)

    @pytest.mark.parametrize("g", range(1, 4))
    def test_untwisted_initials_vanish(self, g):
        assert extract_line_initial(1, g) == 0

    def test_rejects_genus_zero(self):
        with pytest.raises(ValueError):
            extract_line_initial(2, 0)

    def test_rejects_insufficient_order(self):
        with pytest.raises(ValueError):
            extract_line_initial(2, 3, order=4)

    def test_explicit_order_matches_default(self):
        assert extract_line_initial(3, 2, order=10) == extract_line_initial(3, 2)
