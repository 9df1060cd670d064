"""
Partition functions of single-mode boson models.

For H = ε·w(a, a†) and x = −βε the partition function integrand is
F(x, z) = ⟨z|exp(xw)|z⟩ = Σ Wₙ xⁿ/n! = exp(Σ_{n≥1} Vₙ xⁿ/n!). This module
converts between the moments Wₙ and the cumulants Vₙ, expands Wₙ over labeled
diagrams with vertex weights V_k, and evaluates the free-boson partition
function Z = ∫₀^∞ exp(y(eˣ−1)) dy = 1/(1 − e^{−βε}) in closed form and by
quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Literal

import mpmath
from pydantic import BaseModel

from .boson import BosonWord
from .boson import egf_expectation
from .combinatorics import bell_polynomial
from .diagrams import ENUMERATED_MULTIPLICITY_BOUND
from .diagrams import enumerate_labeled_diagrams
from .diagrams import enumerate_shapes
from .diagrams import shape_multiplicity
from .errors import BoundExceededError
from .errors import ConvergenceError
from .errors import DomainError
from .errors import TruncationRangeError
from .logging_config import get_logger
from .polynomial import Coefficient
from .polynomial import Scalar
from .polynomial import YPolynomial
from .series import ExpSeries
from .series import SeriesKind
from .series import series_exp
from .series import series_log
from .series import ybar_exp_minus_one

logger = get_logger("statmech")

DEFAULT_PRECISION = 30
# Extra working digits; results are reported at the requested precision.
GUARD_DIGITS = 10

RealLike = int | float | str | Fraction | mpmath.mpf
ExpansionMethod = Literal["closed", "enumerate"]


def to_mpf(value: RealLike) -> mpmath.mpf:
    """Exact conversion for Fractions; everything else through mpmath.mpf."""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


# Sequences


def _series_kind(values: tuple[Coefficient, ...]) -> SeriesKind:
    return "ypoly" if any(isinstance(v, YPolynomial) for v in values) else "rational"


@dataclass(frozen=True, slots=True)
class MomentSequence:
    """W₀…W_N with W₀ = 1."""

    values: tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            first = self.values[0] if self.values else "nothing"
            raise DomainError(f"moment sequences start with W0 = 1, got {first}")

    @classmethod
    def from_values(cls, values: list[Coefficient | Scalar] | tuple[Coefficient | Scalar, ...]) -> MomentSequence:
        return cls(ExpSeries.from_coefficients(values).coeffs)

    @property
    def order(self) -> int:
        return len(self.values) - 1

    @property
    def kind(self) -> SeriesKind:
        return _series_kind(self.values)

    def to_series(self) -> ExpSeries:
        return ExpSeries(self.values, self.kind)

    def __getitem__(self, n: int) -> Coefficient:
        return self.values[n]


@dataclass(frozen=True, slots=True)
class CumulantSequence:
    """V₁…V_N (index 0 is not stored)."""

    values: tuple[Coefficient, ...] = field(default=())

    @classmethod
    def from_values(cls, values: list[Coefficient | Scalar] | tuple[Coefficient | Scalar, ...]) -> CumulantSequence:
        if not values:
            return cls(())
        return cls(ExpSeries.from_coefficients(values).coeffs)

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def kind(self) -> SeriesKind:
        return _series_kind(self.values)

    def to_series(self) -> ExpSeries:
        zero: Coefficient = YPolynomial.zero() if self.kind == "ypoly" else Fraction(0)
        return ExpSeries((zero, *self.values), self.kind)

    def v(self, k: int) -> Coefficient:
        """V_k, 1-based."""
        if not 1 <= k <= len(self.values):
            raise TruncationRangeError(f"cumulant index {k} outside 1..{len(self.values)}")
        return self.values[k - 1]


def moments_to_cumulants(moments: MomentSequence) -> CumulantSequence:
    """V from log Σ Wₙ xⁿ/n!."""
    logged = series_log(moments.to_series())
    return CumulantSequence(logged.coeffs[1:])


def cumulants_to_moments(cumulants: CumulantSequence) -> MomentSequence:
    """W from exp Σ Vₙ xⁿ/n!."""
    return MomentSequence(series_exp(cumulants.to_series()).coeffs)


def graph_expansion(
    cumulants: CumulantSequence,
    n: int,
    method: ExpansionMethod = "closed",
    enumeration_bound: int = ENUMERATED_MULTIPLICITY_BOUND,
) -> Coefficient:
    """
    Wₙ as a sum over labeled diagrams on n lines of ∏ V_(black-dot degree).

    "closed" sums shape_multiplicity(s)·∏ V_k^{mₖ} over shapes; "enumerate"
    walks all bell(n) diagrams and is limited to n ≤ enumeration_bound.

    Raises:
        TruncationRangeError: n exceeds the cumulant order
        BoundExceededError: enumeration requested above the bound
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > cumulants.order:
        raise TruncationRangeError(f"graph expansion at n={n} needs V up to V{n}, have V{cumulants.order}")
    one: Coefficient = YPolynomial.one() if cumulants.kind == "ypoly" else Fraction(1)
    total: Coefficient = one - one

    if method == "closed":
        for shape in enumerate_shapes(n):
            term: Coefficient = one * shape_multiplicity(shape)
            for k, m in shape.multiplicities().items():
                for _ in range(m):
                    term = term * cumulants.v(k)
            total = total + term
        return total

    if method == "enumerate":
        if n > enumeration_bound:
            raise BoundExceededError(f"diagram enumeration is limited to n <= {enumeration_bound}, got {n}")
        for diagram in enumerate_labeled_diagrams(n):
            term = one
            for size in diagram.partition.block_sizes:
                term = term * cumulants.v(size)
            total = total + term
        return total

    raise DomainError(f"unknown expansion method {method!r}")


# Models


@dataclass(frozen=True, slots=True)
class ModelSpec:
    """H = ε·w(a, a†) at inverse temperature β; x = −βε < 0."""

    word: BosonWord
    energy_scale: RealLike = 1
    beta: RealLike = 1

    def __post_init__(self) -> None:
        if isinstance(self.word, str):
            object.__setattr__(self, "word", BosonWord.parse(self.word))
        if to_mpf(self.energy_scale) <= 0:
            raise DomainError(f"energy scale must be positive, got {self.energy_scale}")
        if to_mpf(self.beta) <= 0:
            raise DomainError(f"inverse temperature must be positive, got {self.beta}")

    @classmethod
    def free_boson(cls, beta_eps: RealLike) -> ModelSpec:
        """w = a†a with ε = 1 and β = βε."""
        if to_mpf(beta_eps) <= 0:
            raise DomainError(f"beta*eps must be positive (the geometric series diverges), got {beta_eps}")
        return cls(BosonWord.number_operator(), 1, beta_eps)

    @property
    def beta_eps(self) -> mpmath.mpf:
        return to_mpf(self.beta) * to_mpf(self.energy_scale)

    @property
    def x(self) -> mpmath.mpf:
        return -self.beta_eps

    def require_free_boson(self) -> None:
        if self.word != BosonWord.number_operator():
            raise DomainError(f"closed-form partition function needs w = ca, got {self.word!s}")


def pfi_free_boson(order: int) -> ExpSeries:
    """⟨z|exp(x a†a)|z⟩ = exp(ybar(eˣ−1)): coefficients are Bₙ(ybar)."""
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    return series_exp(ybar_exp_minus_one(order))


def pfi_general(
    model: ModelSpec | BosonWord | str, order: int, z: Scalar | None = None
) -> tuple[MomentSequence, CumulantSequence]:
    """
    Moments Wₙ(z) = ⟨z|wⁿ|z⟩ and cumulants Vₙ(z) of the model word.

    Symbolic in ybar for balanced words; rationals at a real z otherwise.
    """
    if isinstance(model, ModelSpec):
        word = model.word
    elif isinstance(model, str):
        word = BosonWord.parse(model)
    else:
        word = model
    moments = MomentSequence(egf_expectation(word, order, z).coeffs)
    return moments, moments_to_cumulants(moments)


def partition_function_closed(model: ModelSpec, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """1 / (1 − e^{−βε}) at `precision` decimal digits."""
    model.require_free_boson()
    with mpmath.workdps(precision + GUARD_DIGITS):
        return 1 / (1 - mpmath.exp(model.x))


class QuadratureResult(BaseModel):
    """Composite Simpson on [0, upper] plus the exact exponential tail."""

    value: str
    finite_part: str
    tail: str
    error_bound: float
    upper: float
    steps: int
    precision: int

    def as_mpf(self) -> mpmath.mpf:
        return mpmath.mpf(self.value)


def free_boson_integrand(y: RealLike, x: RealLike) -> mpmath.mpf:
    """exp(y(eˣ − 1)), equal to 1 at y = 0."""
    return mpmath.exp(to_mpf(y) * mpmath.expm1(to_mpf(x)))


def partition_function_quadrature(
    model: ModelSpec,
    upper: float = 60.0,
    steps: int = 8000,
    precision: int = DEFAULT_PRECISION,
    tolerance: float | None = None,
) -> QuadratureResult:
    """
    ∫₀^∞ exp(y(eˣ−1)) dy as Simpson on [0, upper] plus e^{upper·c}/(1−eˣ), c = eˣ−1.

    With c < 0 the fourth derivative of the integrand is bounded by c⁴, so the
    Simpson error is at most upper·h⁴·c⁴/180; the tail term is exact.

    Raises:
        DomainError: x ≥ 0 (divergent integral) or a non-free-boson model
        ConvergenceError: error bound above `tolerance`
    """
    model.require_free_boson()
    if upper <= 0 or steps < 2:
        raise DomainError(f"quadrature needs upper > 0 and steps >= 2, got {upper}, {steps}")
    steps += steps % 2

    with mpmath.workdps(precision + GUARD_DIGITS):
        x = model.x
        if x >= 0:
            raise DomainError(f"integral diverges for x = {x} >= 0")
        c = mpmath.expm1(x)
        a = to_mpf(upper)
        h = a / steps
        total = free_boson_integrand(0, x) + free_boson_integrand(a, x)
        for i in range(1, steps):
            total += (4 if i % 2 else 2) * mpmath.exp(c * i * h)
        finite = total * h / 3
        tail = mpmath.exp(a * c) / (-c)
        value = finite + tail
        bound = a * h**4 * c**4 / 180
        digits = precision

        result = QuadratureResult(
            value=mpmath.nstr(value, digits, strip_zeros=False),
            finite_part=mpmath.nstr(finite, digits, strip_zeros=False),
            tail=mpmath.nstr(tail, digits),
            error_bound=float(bound),
            upper=float(upper),
            steps=steps,
            precision=precision,
        )
    logger.debug(f"Simpson x={x}: value={result.value} bound={result.error_bound:.2e}")
    if tolerance is not None and result.error_bound > tolerance:
        raise ConvergenceError(
            f"Simpson error bound {result.error_bound:.2e} exceeds {tolerance:.1e}; increase steps"
        )
    return result


def partition_function_radial(model: ModelSpec, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """
    Z from the coherent-state measure d²z/π in polar form.

    The angular integral gives 2π, so Z = ∫₀^∞ 2r·exp(r²(eˣ−1)) dr, which is
    the y-integral after y = r².
    """
    model.require_free_boson()
    with mpmath.workdps(precision):
        c = mpmath.expm1(model.x)
        return mpmath.quad(lambda r: 2 * r * mpmath.exp(c * r * r), [0, mpmath.inf])


# Divergence diagnostics


class DivergentTerm(BaseModel):
    n: int
    polynomial: str
    powers: list[int]
    divergent: bool
    reason: str


class DivergenceReport(BaseModel):
    order: int
    terms: list[DivergentTerm]
    all_divergent: bool
    conclusion: str


def termwise_divergence_report(order: int) -> DivergenceReport:
    """
    Inspect each term Bₙ(y)xⁿ/n! of the expanded y-integrand.

    Every monomial yᵏ has ∫₀^∞ yᵏ dy = ∞, so each term diverges on its own even
    though the summed integrand is integrable. Order 0 reports the constant
    term alone; otherwise n runs over 1..order.
    """
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    indices = [0] if order == 0 else list(range(1, order + 1))
    terms = []
    for n in indices:
        poly = bell_polynomial(n)
        powers = list(poly.support())
        terms.append(
            DivergentTerm(
                n=n,
                polynomial=poly.render("y"),
                powers=powers,
                divergent=bool(powers),
                reason=", ".join(f"∫₀^∞ y^{k} dy = ∞" for k in powers),
            )
        )
    all_divergent = all(t.divergent for t in terms)
    conclusion = (
        "every term integrates to infinity; summation and integration may not be interchanged"
        if all_divergent
        else "some terms are integrable"
    )
    return DivergenceReport(order=order, terms=terms, all_divergent=all_divergent, conclusion=conclusion)

