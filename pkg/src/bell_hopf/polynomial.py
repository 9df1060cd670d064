"""Univariate polynomials with exact rational coefficients.

`YPolynomial` is the coefficient ring used for Bell polynomials Bₙ(y) and for
coherent-state expectations written in ybar = |z|².
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

Scalar = int | Fraction


def to_fraction(value: Scalar | str) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(value, int | str | Rational):
        return Fraction(value)
    raise TypeError(f"Not an exact rational: {value!r}")


def format_rational(value: Scalar) -> str:
    """Render as "p/q", integers without "/1"."""
    return str(to_fraction(value))


@dataclass(frozen=True, slots=True)
class YPolynomial:
    """Σ cₖ yᵏ with Fraction coefficients; trailing zeros are never stored."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [to_fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Scalar | str]) -> YPolynomial:
        return cls(tuple(to_fraction(c) for c in coefficients))

    @classmethod
    def constant(cls, value: Scalar) -> YPolynomial:
        return cls((to_fraction(value),))

    @classmethod
    def zero(cls) -> YPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> YPolynomial:
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, power: int, coefficient: Scalar = 1) -> YPolynomial:
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls((Fraction(0),) * power + (to_fraction(coefficient),))

    @classmethod
    def y(cls) -> YPolynomial:
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def support(self) -> tuple[int, ...]:
        """Powers carrying a nonzero coefficient, ascending."""
        return tuple(k for k, c in enumerate(self.coefficients) if c != 0)

    def evaluate(self, y: Scalar) -> Fraction:
        """Horner evaluation, exact."""
        value = Fraction(0)
        point = to_fraction(y)
        for c in reversed(self.coefficients):
            value = value * point + c
        return value

    def scale(self, factor: Scalar) -> YPolynomial:
        f = to_fraction(factor)
        return YPolynomial(tuple(c * f for c in self.coefficients))

    def _coerce(self, other: object) -> YPolynomial | None:
        if isinstance(other, YPolynomial):
            return other
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return YPolynomial.constant(other)
        return None

    def __add__(self, other: object) -> YPolynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self.coefficients), len(rhs.coefficients))
        return YPolynomial(tuple(self.coefficient(k) + rhs.coefficient(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self) -> YPolynomial:
        return YPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: object) -> YPolynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> YPolynomial:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> YPolynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return YPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(rhs.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(rhs.coefficients):
                out[i + j] += a * b
        return YPolynomial(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coefficients == rhs.coefficients

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.coefficient(0))
        return hash(self.coefficients)

    def render(self, var: str = "y") -> str:
        """Ascending-power text, e.g. "ybar + 3 ybar^2 + ybar^3"."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                body = format_rational(abs(c))
            else:
                base = var if power == 1 else f"{var}^{power}"
                body = base if abs(c) == 1 else f"{format_rational(abs(c))} {base}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"YPolynomial({self.render()!r})"


Coefficient = Fraction | YPolynomial
