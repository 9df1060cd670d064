"""
Truncated exponential generating functions with exact coefficients.

An `ExpSeries` of order N stands for f(x) = Σₙ cₙ xⁿ/n! + O(x^{N+1}). The
coefficients are either all `Fraction` ("rational" kind) or all `YPolynomial`
("ypoly" kind); the two kinds never mix silently.

exp and log use the exponential-formula recurrences, which need no division:

    g = exp(f):  gₙ = Σ_{k=1..n} C(n−1,k−1) fₖ g_{n−k}
    g = log(f):  gₙ = fₙ − Σ_{k=1..n−1} C(n−1,k−1) gₖ f_{n−k}
"""

from __future__ import annotations

from collections.abc import Callable
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

from .errors import CoefficientKindError
from .errors import DomainError
from .errors import TruncationRangeError
from .polynomial import Coefficient
from .polynomial import Scalar
from .polynomial import YPolynomial
from .polynomial import to_fraction

DEFAULT_ORDER = 16

SeriesKind = Literal["rational", "ypoly"]


def _kind_of(value: object) -> SeriesKind:
    if isinstance(value, YPolynomial):
        return "ypoly"
    if isinstance(value, int | Fraction) and not isinstance(value, bool):
        return "rational"
    raise CoefficientKindError(f"Unsupported series coefficient: {value!r}")


def _zero(kind: SeriesKind) -> Coefficient:
    return YPolynomial.zero() if kind == "ypoly" else Fraction(0)


def _one(kind: SeriesKind) -> Coefficient:
    return YPolynomial.one() if kind == "ypoly" else Fraction(1)


def _is_zero(value: Coefficient) -> bool:
    return value == 0


def _check_order(order: int) -> None:
    if isinstance(order, bool) or not isinstance(order, int) or order < 0:
        raise DomainError(f"truncation order must be a non-negative integer, got {order!r}")


@dataclass(frozen=True, slots=True)
class ExpSeries:
    """Truncated EGF: c₀…c_N with cₙ the coefficient of xⁿ/n!."""

    coeffs: tuple[Coefficient, ...]
    kind: SeriesKind = "rational"

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("an ExpSeries needs at least the constant coefficient")
        normalized: list[Coefficient] = []
        for c in self.coeffs:
            if self.kind == "ypoly":
                if isinstance(c, YPolynomial):
                    normalized.append(c)
                elif _kind_of(c) == "rational":
                    normalized.append(YPolynomial.constant(c))  # type: ignore[arg-type]
            else:
                if _kind_of(c) != "rational":
                    raise CoefficientKindError(
                        f"rational series cannot hold polynomial coefficient {c}"
                    )
                normalized.append(to_fraction(c))  # type: ignore[arg-type]
        object.__setattr__(self, "coeffs", tuple(normalized))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # Constructors

    @classmethod
    def from_coefficients(
        cls, coefficients: Iterable[Coefficient | Scalar], kind: SeriesKind | None = None
    ) -> ExpSeries:
        items = tuple(coefficients)
        if kind is None:
            kind = "ypoly" if any(isinstance(c, YPolynomial) for c in items) else "rational"
        return cls(items, kind)  # type: ignore[arg-type]

    @classmethod
    def constant(cls, value: Coefficient | Scalar, order: int = DEFAULT_ORDER) -> ExpSeries:
        _check_order(order)
        kind = _kind_of(value)
        return cls((value, *([_zero(kind)] * order)), kind)  # type: ignore[arg-type]

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER, kind: SeriesKind = "rational") -> ExpSeries:
        _check_order(order)
        return cls(tuple(_zero(kind) for _ in range(order + 1)), kind)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER, kind: SeriesKind = "rational") -> ExpSeries:
        _check_order(order)
        return cls((_one(kind), *(_zero(kind) for _ in range(order))), kind)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> ExpSeries:
        """The series of x itself: c₁ = 1, everything else 0."""
        _check_order(order)
        return cls(tuple(Fraction(1 if n == 1 else 0) for n in range(order + 1)))

    @classmethod
    def exp_x(cls, order: int = DEFAULT_ORDER, scale: Scalar = 1) -> ExpSeries:
        """e^{scale·x}: cₙ = scaleⁿ."""
        _check_order(order)
        s = to_fraction(scale)
        return cls(tuple(s**n for n in range(order + 1)))

    @classmethod
    def exp_minus_one(cls, order: int = DEFAULT_ORDER) -> ExpSeries:
        """eˣ − 1: c₀ = 0, cₙ = 1 for n ≥ 1."""
        _check_order(order)
        return cls(tuple(Fraction(0 if n == 0 else 1) for n in range(order + 1)))

    @classmethod
    def from_function(cls, order: int, term: Callable[[int], Coefficient | Scalar]) -> ExpSeries:
        _check_order(order)
        return cls.from_coefficients(term(n) for n in range(order + 1))

    # Conversions

    def lift(self) -> ExpSeries:
        """View a rational series as a ypoly series with constant coefficients."""
        if self.kind == "ypoly":
            return self
        return ExpSeries(tuple(YPolynomial.constant(c) for c in self.coeffs), "ypoly")  # type: ignore[arg-type]

    def scale(self, factor: Coefficient | Scalar) -> ExpSeries:
        """Multiply every coefficient by a constant (a Fraction or a YPolynomial)."""
        if isinstance(factor, YPolynomial):
            return ExpSeries(tuple(factor * c for c in self.lift().coeffs), "ypoly")
        f = to_fraction(factor)
        return ExpSeries(tuple(c * f for c in self.coeffs), self.kind)

    def specialize(self, value: Scalar) -> ExpSeries:
        """Evaluate every polynomial coefficient at y = value."""
        if self.kind == "rational":
            return self
        return ExpSeries(tuple(c.evaluate(value) for c in self.coeffs), "rational")  # type: ignore[union-attr]

    def truncate(self, order: int) -> ExpSeries:
        _check_order(order)
        if order > self.order:
            raise TruncationRangeError(f"cannot truncate order {self.order} series to {order}")
        return ExpSeries(self.coeffs[: order + 1], self.kind)

    # Arithmetic

    def _align(self, other: object) -> ExpSeries | None:
        if isinstance(other, ExpSeries):
            return other
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            # scalars take the coefficient kind of the series they meet
            if self.kind == "ypoly":
                return ExpSeries.constant(YPolynomial.constant(other), self.order)
            return ExpSeries.constant(other, self.order)
        if isinstance(other, YPolynomial):
            return ExpSeries.constant(other, self.order)
        return None

    def __add__(self, other: object) -> ExpSeries:
        rhs = self._align(other)
        if rhs is None:
            return NotImplemented
        return series_add(self, rhs)

    __radd__ = __add__

    def __neg__(self) -> ExpSeries:
        return self.scale(-1)

    def __sub__(self, other: object) -> ExpSeries:
        rhs = self._align(other)
        if rhs is None:
            return NotImplemented
        return series_add(self, -rhs)

    def __mul__(self, other: object) -> ExpSeries:
        rhs = self._align(other)
        if rhs is None:
            return NotImplemented
        return series_mul(self, rhs)

    __rmul__ = __mul__

    def __getitem__(self, n: int) -> Coefficient:
        return coefficient(self, n)

    def __len__(self) -> int:
        return len(self.coeffs)


def _common_kind(f: ExpSeries, g: ExpSeries) -> SeriesKind:
    if f.kind != g.kind:
        raise CoefficientKindError(
            f"cannot combine {f.kind} and {g.kind} series; lift() the rational one first"
        )
    return f.kind


def series_add(f: ExpSeries, g: ExpSeries) -> ExpSeries:
    """Coefficient-wise sum, truncated to the smaller order."""
    kind = _common_kind(f, g)
    order = min(f.order, g.order)
    return ExpSeries(tuple(f.coeffs[n] + g.coeffs[n] for n in range(order + 1)), kind)  # type: ignore[operator]


def series_mul(f: ExpSeries, g: ExpSeries) -> ExpSeries:
    """EGF product: cₙ = Σₖ C(n,k) fₖ g_{n−k}, truncated to the smaller order."""
    kind = _common_kind(f, g)
    order = min(f.order, g.order)
    out: list[Coefficient] = []
    for n in range(order + 1):
        total = _zero(kind)
        for k in range(n + 1):
            a, b = f.coeffs[k], g.coeffs[n - k]
            if _is_zero(a) or _is_zero(b):
                continue
            total = total + comb(n, k) * a * b  # type: ignore[operator]
        out.append(total)
    return ExpSeries(tuple(out), kind)


def series_exp(f: ExpSeries) -> ExpSeries:
    """
    exp∘f truncated to order(f).

    Raises:
        DomainError: c₀(f) ≠ 0
    """
    if not _is_zero(f.coeffs[0]):
        raise DomainError(f"series_exp needs a zero constant term, got {f.coeffs[0]}")
    kind = f.kind
    g: list[Coefficient] = [_one(kind)]
    for n in range(1, f.order + 1):
        total = _zero(kind)
        for k in range(1, n + 1):
            fk = f.coeffs[k]
            if _is_zero(fk):
                continue
            total = total + comb(n - 1, k - 1) * fk * g[n - k]  # type: ignore[operator]
        g.append(total)
    return ExpSeries(tuple(g), kind)


def series_log(f: ExpSeries) -> ExpSeries:
    """
    Inverse of series_exp, truncated to order(f).

    Raises:
        DomainError: c₀(f) ≠ 1
    """
    if f.coeffs[0] != 1:
        raise DomainError(f"series_log needs constant term 1, got {f.coeffs[0]}")
    kind = f.kind
    g: list[Coefficient] = [_zero(kind)]
    for n in range(1, f.order + 1):
        total = f.coeffs[n]
        for k in range(1, n):
            gk = g[k]
            if _is_zero(gk):
                continue
            total = total - comb(n - 1, k - 1) * gk * f.coeffs[n - k]  # type: ignore[operator]
        g.append(total)
    return ExpSeries(tuple(g), kind)


def coefficient(f: ExpSeries, n: int) -> Coefficient:
    """
    Return cₙ.

    Raises:
        TruncationRangeError: n > order(f) or n < 0
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0 or n > f.order:
        raise TruncationRangeError(f"coefficient index {n!r} outside 0..{f.order}")
    return f.coeffs[n]


def ybar_exp_minus_one(order: int = DEFAULT_ORDER) -> ExpSeries:
    """y·(eˣ − 1) as a ypoly series."""
    return ExpSeries.exp_minus_one(order).scale(YPolynomial.y())
