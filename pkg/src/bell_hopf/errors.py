"""
Exception hierarchy for bell-hopf.

Every library failure derives from BellHopfError and carries the process exit
code the CLI reports for it.
"""


class BellHopfError(Exception):
    """Base exception for all bell-hopf operations."""

    exit_code: int = 1


class DomainError(BellHopfError, ValueError):
    """Argument outside the domain of the operation (k > n, c0 != 0 in exp, ...)."""

    exit_code = 3


class CoefficientKindError(BellHopfError, TypeError):
    """Series with rational and polynomial coefficients were mixed."""

    exit_code = 3


class TruncationRangeError(BellHopfError, IndexError):
    """Requested coefficient lies beyond the truncation order."""

    exit_code = 3


class BoundExceededError(BellHopfError, ValueError):
    """Input exceeds a configured or documented practical bound."""

    exit_code = 4


class ConvergenceError(BellHopfError, ArithmeticError):
    """A numeric estimate did not reach the requested tolerance."""

    exit_code = 5


class ParseError(BellHopfError, ValueError):
    """Text input could not be parsed.

    Args:
        message: Human-readable reason
        text: The offending input
        position: 1-based character position of the first bad character
    """

    exit_code = 6

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if position:
            message = f"{message} at position {position}"
        super().__init__(message)


class WordParseError(ParseError):
    """Invalid boson word (alphabet is `a` and `c`)."""


class ElementParseError(ParseError):
    """Invalid Hopf-algebra element text."""
