"""
Unit tests for exact rational polynomials in y.
"""

from fractions import Fraction

import pytest

from bell_hopf.polynomial import YPolynomial
from bell_hopf.polynomial import format_rational
from bell_hopf.polynomial import to_fraction


class TestRationals:
    def test_to_fraction(self):
        assert to_fraction(3) == Fraction(3)
        assert to_fraction("-2/6") == Fraction(-1, 3)
        with pytest.raises(TypeError):
            to_fraction(True)
        with pytest.raises(TypeError):
            to_fraction(0.5)  # type: ignore[arg-type]

    def test_format_rational(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 4)) == "-3/4"


class TestYPolynomial:
    """Arithmetic, evaluation and rendering."""

    def test_trailing_zeros_stripped(self):
        p = YPolynomial.from_coefficients([1, 2, 0, 0])
        assert p.coefficients == (Fraction(1), Fraction(2))
        assert p.degree == 1
        assert YPolynomial.zero().degree == -1

    def test_arithmetic(self):
        y = YPolynomial.y()
        p = (y + 1) * (y - 1)
        assert p == YPolynomial.from_coefficients([-1, 0, 1])
        assert p + 1 == y * y
        assert 2 * y == y.scale(2)
        assert (1 - y).coefficients == (Fraction(1), Fraction(-1))

    def test_constant_equals_scalar(self):
        assert YPolynomial.constant(Fraction(3, 2)) == Fraction(3, 2)
        assert hash(YPolynomial.constant(5)) == hash(Fraction(5))

    def test_evaluate(self):
        p = YPolynomial.from_coefficients([0, 1, 3, 1])
        assert p.evaluate(2) == 2 + 12 + 8
        assert p.evaluate(Fraction(1, 2)) == Fraction(1, 2) + Fraction(3, 4) + Fraction(1, 8)

    def test_render(self):
        p = YPolynomial.from_coefficients([0, 1, 3, 1])
        assert p.render("ybar") == "ybar + 3 ybar^2 + ybar^3"
        q = YPolynomial.from_coefficients([Fraction(-1, 2), 0, -1])
        assert q.render() == "-1/2 - y^2"
        assert YPolynomial.zero().render() == "0"

    def test_support(self):
        assert YPolynomial.from_coefficients([0, 1, 0, 4]).support() == (1, 3)

    def test_monomial_rejects_negative_power(self):
        with pytest.raises(ValueError):
            YPolynomial.monomial(-1)
