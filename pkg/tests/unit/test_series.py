"""
Unit tests for truncated exponential generating functions.
"""

from fractions import Fraction

import pytest

from bell_hopf.combinatorics import bell
from bell_hopf.combinatorics import bell_polynomial
from bell_hopf.errors import CoefficientKindError
from bell_hopf.errors import DomainError
from bell_hopf.errors import TruncationRangeError
from bell_hopf.polynomial import YPolynomial
from bell_hopf.series import ExpSeries
from bell_hopf.series import coefficient
from bell_hopf.series import series_exp
from bell_hopf.series import series_log
from bell_hopf.series import series_mul
from bell_hopf.series import ybar_exp_minus_one


class TestConstruction:
    def test_kind_inference(self):
        assert ExpSeries.from_coefficients([1, 2, 3]).kind == "rational"
        assert ExpSeries.from_coefficients([1, YPolynomial.y()]).kind == "ypoly"

    def test_rational_rejects_polynomials(self):
        with pytest.raises(CoefficientKindError):
            ExpSeries((Fraction(1), YPolynomial.y()), "rational")

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            ExpSeries(())

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            ExpSeries.one(-1)

    def test_exp_x(self):
        assert ExpSeries.exp_x(4, scale=2).coeffs == tuple(Fraction(2**n) for n in range(5))


class TestArithmetic:
    def test_product_of_exponentials(self):
        f = ExpSeries.exp_x(8, scale=2)
        g = ExpSeries.exp_x(8, scale=3)
        assert series_mul(f, g) == ExpSeries.exp_x(8, scale=5)

    def test_product_truncates_to_smaller_order(self):
        f = ExpSeries.exp_x(3)
        g = ExpSeries.exp_x(6)
        assert (f * g).order == 3

    def test_mixed_kinds_rejected(self):
        with pytest.raises(CoefficientKindError):
            ExpSeries.exp_x(3) + ybar_exp_minus_one(3)

    def test_lift_allows_mixing(self):
        total = ExpSeries.exp_x(3).lift() + ybar_exp_minus_one(3)
        assert total.kind == "ypoly"
        assert total[2] == YPolynomial.from_coefficients([1, 1])

    def test_scalar_arithmetic(self):
        f = ExpSeries.exp_minus_one(4) + 1
        assert f == ExpSeries.exp_x(4)
        assert (2 * f)[3] == 2

    def test_scalar_takes_polynomial_kind(self):
        g = ybar_exp_minus_one(4)
        shifted = g + 1
        assert shifted.kind == "ypoly"
        assert shifted[0] == YPolynomial.one()
        assert shifted[1] == YPolynomial.y()
        assert 1 + g == shifted
        assert shifted - 1 == g
        assert (3 * g)[2] == YPolynomial.from_coefficients([0, 3])
        assert (g * Fraction(1, 2))[1] == YPolynomial.from_coefficients([0, Fraction(1, 2)])


class TestExpLog:
    """The exponential formula and its inverse."""

    def test_exp_of_exp_minus_one_gives_bell_numbers(self):
        g = series_exp(ExpSeries.exp_minus_one(12))
        assert [int(c) for c in g.coeffs] == [bell(n) for n in range(13)]

    def test_exp_of_ybar_series_gives_bell_polynomials(self):
        g = series_exp(ybar_exp_minus_one(12))
        assert g.kind == "ypoly"
        for n in range(13):
            assert g[n] == bell_polynomial(n)

    def test_exp_requires_zero_constant(self):
        with pytest.raises(DomainError):
            series_exp(ExpSeries.exp_x(3))

    def test_log_requires_unit_constant(self):
        with pytest.raises(DomainError):
            series_log(ExpSeries.exp_minus_one(3))

    def test_log_of_exp_x_is_x(self):
        assert series_log(ExpSeries.exp_x(7)) == ExpSeries.x(7)

    @pytest.mark.parametrize(
        "coeffs",
        [
            [0, 1, 0, 0, 0, 0],
            [0, Fraction(1, 2), -3, 7, Fraction(5, 3), 11],
            [0, 0, 0, 1, 0, 2],
        ],
    )
    def test_log_inverts_exp(self, coeffs):
        f = ExpSeries.from_coefficients(coeffs)
        assert series_log(series_exp(f)) == f

    def test_log_inverts_exp_symbolic(self):
        f = ybar_exp_minus_one(8)
        assert series_log(series_exp(f)) == f


class TestCoefficientAccess:
    def test_in_range(self):
        f = ExpSeries.exp_x(3, scale=Fraction(1, 2))
        assert coefficient(f, 3) == Fraction(1, 8)

    def test_out_of_range(self):
        f = ExpSeries.exp_x(3)
        with pytest.raises(TruncationRangeError):
            coefficient(f, 4)
        with pytest.raises(TruncationRangeError):
            f[-1]

    def test_truncate(self):
        assert ExpSeries.exp_x(6).truncate(2) == ExpSeries.exp_x(2)
        with pytest.raises(TruncationRangeError):
            ExpSeries.exp_x(2).truncate(5)

    def test_specialize(self):
        g = series_exp(ybar_exp_minus_one(5)).specialize(1)
        assert g.kind == "rational"
        assert [int(c) for c in g.coeffs] == [1, 1, 2, 5, 15, 52]
