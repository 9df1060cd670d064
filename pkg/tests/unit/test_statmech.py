"""
Unit tests for moments, cumulants, the graph expansion and the free-boson Z.
"""

import random
from fractions import Fraction

import mpmath
import pytest

from bell_hopf.boson import BosonWord
from bell_hopf.combinatorics import bell
from bell_hopf.combinatorics import bell_polynomial
from bell_hopf.errors import BoundExceededError
from bell_hopf.errors import ConvergenceError
from bell_hopf.errors import DomainError
from bell_hopf.errors import TruncationRangeError
from bell_hopf.parsing import parse_real
from bell_hopf.polynomial import YPolynomial
from bell_hopf.statmech import CumulantSequence
from bell_hopf.statmech import ModelSpec
from bell_hopf.statmech import MomentSequence
from bell_hopf.statmech import cumulants_to_moments
from bell_hopf.statmech import free_boson_integrand
from bell_hopf.statmech import graph_expansion
from bell_hopf.statmech import moments_to_cumulants
from bell_hopf.statmech import partition_function_closed
from bell_hopf.statmech import partition_function_quadrature
from bell_hopf.statmech import partition_function_radial
from bell_hopf.statmech import pfi_free_boson
from bell_hopf.statmech import pfi_general
from bell_hopf.statmech import termwise_divergence_report
from bell_hopf.statmech import to_mpf


class TestSequences:
    def test_moments_must_start_with_one(self):
        with pytest.raises(DomainError):
            MomentSequence.from_values([2, 1])
        with pytest.raises(DomainError):
            MomentSequence.from_values([])

    def test_bell_numbers_have_unit_cumulants(self):
        moments = MomentSequence.from_values([bell(n) for n in range(8)])
        cumulants = moments_to_cumulants(moments)
        assert cumulants.values == tuple(Fraction(1) for _ in range(7))
        assert cumulants_to_moments(cumulants) == moments

    @pytest.mark.parametrize("seed", range(5))
    def test_random_round_trip_to_order_twelve(self, seed):
        rng = random.Random(seed)
        moments = MomentSequence.from_values(
            [1] + [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(12)]
        )
        cumulants = moments_to_cumulants(moments)
        assert cumulants.order == 12
        assert cumulants_to_moments(cumulants) == moments

        values = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(12)]
        back = moments_to_cumulants(cumulants_to_moments(CumulantSequence.from_values(values)))
        assert back.values == tuple(values)

    def test_bell_moments_to_order_twelve(self):
        moments = MomentSequence.from_values([bell(n) for n in range(13)])
        assert moments_to_cumulants(moments).values == (Fraction(1),) * 12

    def test_cumulant_index(self):
        cumulants = CumulantSequence.from_values([1, 2, 3])
        assert cumulants.v(2) == 2
        with pytest.raises(TruncationRangeError):
            cumulants.v(0)
        with pytest.raises(TruncationRangeError):
            cumulants.v(4)

    def test_empty_cumulants_give_unit_moment(self):
        moments = cumulants_to_moments(CumulantSequence.from_values([]))
        assert moments.values == (Fraction(1),)


class TestIntegrandSeries:
    """⟨z|exp(xw)|z⟩ for the free boson and general words."""

    def test_free_boson_is_bell_polynomials(self):
        series = pfi_free_boson(7)
        assert [series[n] for n in range(8)] == [bell_polynomial(n) for n in range(8)]

    def test_free_boson_cumulants_are_ybar(self):
        moments, cumulants = pfi_general("ca", 6)
        assert moments.values == pfi_free_boson(6).coeffs
        assert all(v == YPolynomial.y() for v in cumulants.values)

    def test_empty_word(self):
        moments, cumulants = pfi_general("", 4)
        assert all(w == 1 for w in moments.values)
        assert [v == 0 for v in cumulants.values] == [False, True, True, True]

    def test_unbalanced_word_at_real_z(self):
        moments, cumulants = pfi_general(BosonWord.parse("a"), 4, z=Fraction(1, 2))
        assert moments.values == tuple(Fraction(1, 2) ** n for n in range(5))
        assert cumulants.values == (Fraction(1, 2), 0, 0, 0)

    def test_model_spec_word(self):
        model = ModelSpec("acac")
        moments, _ = pfi_general(model, 2)
        # ⟨z|(a a†)²|z⟩ = ybar² + 3 ybar + 1
        assert moments[2] == YPolynomial.from_coefficients([1, 3, 1])

    def test_unbalanced_without_z(self):
        with pytest.raises(DomainError):
            pfi_general("aac", 3)


class TestGraphExpansion:
    def test_small_case(self):
        cumulants = CumulantSequence.from_values([1, 2, 3])
        assert graph_expansion(cumulants, 3, "closed") == 10
        assert graph_expansion(cumulants, 3, "enumerate") == 10
        assert cumulants_to_moments(cumulants)[3] == 10

    @pytest.mark.parametrize("n", range(0, 9))
    def test_agrees_with_series_exponential(self, n):
        cumulants = CumulantSequence.from_values([Fraction(k, k + 2) * (-1) ** k for k in range(1, 9)])
        expected = cumulants_to_moments(cumulants)[n]
        assert graph_expansion(cumulants, n, "closed") == expected
        assert graph_expansion(cumulants, n, "enumerate") == expected

    @pytest.mark.parametrize("seed", range(3))
    def test_random_cumulants_enumerate_equals_closed(self, seed):
        rng = random.Random(seed)
        cumulants = CumulantSequence.from_values(
            [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)]
        )
        for n in range(9):
            closed = graph_expansion(cumulants, n, "closed")
            assert graph_expansion(cumulants, n, "enumerate") == closed
            assert closed == cumulants_to_moments(cumulants)[n]

    def test_symbolic_cumulants(self):
        _, cumulants = pfi_general("ca", 5)
        assert graph_expansion(cumulants, 5) == bell_polynomial(5)

    def test_range_and_bound(self):
        with pytest.raises(TruncationRangeError):
            graph_expansion(CumulantSequence.from_values([1, 1]), 3)
        with pytest.raises(BoundExceededError):
            graph_expansion(CumulantSequence.from_values([1] * 11), 11, "enumerate")
        with pytest.raises(DomainError):
            graph_expansion(CumulantSequence.from_values([1]), 1, "guess")  # type: ignore[arg-type]


class TestPartitionFunction:
    """Free-boson Z = 1/(1 − e^{−βε})."""

    def test_model_validation(self):
        with pytest.raises(DomainError):
            ModelSpec.free_boson(0)
        with pytest.raises(DomainError):
            ModelSpec.free_boson(-1)
        with pytest.raises(DomainError):
            ModelSpec("ca", beta=-2)

    def test_closed_form_at_ln2(self):
        model = ModelSpec.free_boson(parse_real("ln2", 30))
        with mpmath.workdps(30):
            assert abs(partition_function_closed(model, 30) - 2) < mpmath.mpf(10) ** -25

    def test_closed_form_needs_free_boson(self):
        with pytest.raises(DomainError):
            partition_function_closed(ModelSpec("aacc"))

    def test_integrand_at_origin(self):
        assert free_boson_integrand(0, -1) == 1

    def test_quadrature_agrees_within_bound(self):
        model = ModelSpec.free_boson(parse_real("ln2", 30))
        result = partition_function_quadrature(model, upper=60, steps=4000, precision=30)
        closed = partition_function_closed(model, 30)
        assert result.steps == 4000
        assert result.error_bound < 1e-8
        with mpmath.workdps(30):
            assert abs(result.as_mpf() - closed) <= result.error_bound + 1e-20

    @pytest.mark.parametrize("beta_eps", [Fraction(1, 2), Fraction(1), Fraction(2)])
    def test_quadrature_matches_closed_form(self, beta_eps):
        model = ModelSpec.free_boson(beta_eps)
        result = partition_function_quadrature(model, upper=60, precision=30)
        closed = partition_function_closed(model, 30)
        with mpmath.workdps(30):
            gap = abs(result.as_mpf() - closed)
            assert gap <= result.error_bound + 1e-20
            assert gap < 1e-9

    def test_closed_form_at_one(self):
        with mpmath.workdps(30):
            value = partition_function_closed(ModelSpec.free_boson(1), 30)
            assert abs(value - mpmath.mpf("1.581976706869326")) < 1e-15

    def test_odd_steps_rounded_up(self):
        model = ModelSpec.free_boson(1)
        assert partition_function_quadrature(model, steps=101).steps == 102

    def test_quadrature_tolerance(self):
        model = ModelSpec.free_boson(Fraction(1, 2))
        with pytest.raises(ConvergenceError):
            partition_function_quadrature(model, upper=60, steps=2, tolerance=1e-6)

    def test_radial_form(self):
        model = ModelSpec.free_boson(parse_real("ln3", 20))
        with mpmath.workdps(20):
            assert abs(partition_function_radial(model, 20) - mpmath.mpf(3) / 2) < mpmath.mpf(10) ** -15

    def test_to_mpf_is_exact_for_fractions(self):
        with mpmath.workdps(30):
            assert abs(to_mpf(Fraction(1, 3)) * 3 - 1) < mpmath.mpf(10) ** -28


class TestDivergenceReport:
    def test_every_term_diverges(self):
        report = termwise_divergence_report(4)
        assert [t.n for t in report.terms] == [1, 2, 3, 4]
        assert report.all_divergent
        assert report.terms[2].polynomial == "y + 3 y^2 + y^3"
        assert report.terms[2].powers == [1, 2, 3]
        assert "may not be interchanged" in report.conclusion

    def test_order_zero(self):
        report = termwise_divergence_report(0)
        assert [t.n for t in report.terms] == [0]
        assert report.terms[0].powers == [0]
        assert report.all_divergent

    def test_negative_order(self):
        with pytest.raises(DomainError):
            termwise_divergence_report(-1)
