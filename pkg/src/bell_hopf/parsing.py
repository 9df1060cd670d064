"""Text inputs shared by the CLI and the MCP tools: rationals, rational lists, reals."""

from __future__ import annotations

import re
from fractions import Fraction

import mpmath

from .errors import DomainError
from .errors import ParseError

_LN = re.compile(r"^ln\s*\(?\s*([0-9./]+)\s*\)?$")

# Guard digits used while reading a real before it is rounded by the consumer.
_READ_GUARD = 10


def parse_rational(text: str) -> Fraction:
    """
    "3", "-1/2" or "0.25" as an exact Fraction.

    Raises:
        ParseError: not a rational literal
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {text.strip()!r}", text, 1) from None


def parse_rational_list(text: str) -> list[Fraction]:
    """ "1,1/2,0" -> [1, 1/2, 0]; an empty string is the empty list."""
    if not text.strip():
        return []
    values = []
    offset = 1
    for piece in text.split(","):
        try:
            values.append(Fraction(piece.strip()))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {piece.strip()!r}", text, offset) from None
        offset += len(piece) + 1
    return values


def parse_real(text: str, precision: int) -> mpmath.mpf:
    """
    Decimal, "p/q", "lnK" or "ln(K)" as an mpf carrying `precision` digits.

    Raises:
        ParseError: anything else
        DomainError: logarithm of a non-positive number
    """
    source = text.strip()
    with mpmath.workdps(precision + _READ_GUARD):
        match = _LN.match(source)
        try:
            if match:
                argument = Fraction(match.group(1))
                if argument <= 0:
                    raise DomainError(f"logarithm of non-positive {argument}")
                return mpmath.log(mpmath.mpf(argument.numerator) / argument.denominator)
            if "/" in source:
                exact = Fraction(source)
                return mpmath.mpf(exact.numerator) / exact.denominator
            return mpmath.mpf(source)
        except DomainError:
            raise
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot read {text!r} as a real number", text, 1) from None
