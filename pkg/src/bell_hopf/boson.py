"""
Single-mode boson operator algebra.

Words over {a, c} (annihilator a, creator c = a†) are normal ordered by
pushing letters one at a time onto the right of a normal form. Appending `a`
only raises the annihilator power; appending `c` applies a·a† → a†·a + 1
through the closed commutation a^s·a† = a†·a^s + s·a^{s−1}. Prefixes are
memoized, so (ca)ⁿ after (ca)ⁿ⁻¹ costs one extra pair of pushes.

Coherent-state expectations replace (a†)^r a^s by zbar^r z^s; a numpy
truncated-Fock oracle checks them numerically.
"""

from __future__ import annotations

import math
import threading
from collections import OrderedDict
from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np
from pydantic import BaseModel

from .combinatorics import stirling_row
from .errors import ConvergenceError
from .errors import DomainError
from .errors import WordParseError
from .logging_config import get_logger
from .polynomial import Scalar
from .polynomial import YPolynomial
from .polynomial import to_fraction
from .series import DEFAULT_ORDER
from .series import ExpSeries

logger = get_logger("boson")

Letter = Literal["a", "c"]
ANNIHILATOR: Letter = "a"
CREATOR: Letter = "c"
_ALPHABET = frozenset("ac")

NormalKey = tuple[int, int]


# Words


@dataclass(frozen=True, slots=True)
class BosonWord:
    """Left-to-right operator product over `a` and `c`; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> BosonWord:
        """
        Parse the compact word syntax, e.g. "ca" for a†a.

        Raises:
            WordParseError: any character other than `a` or `c`, with its 1-based position
        """
        for position, char in enumerate(text, start=1):
            if char not in _ALPHABET:
                raise WordParseError(f"invalid character {char!r} in word {text!r}", text, position)
        return cls(tuple(text))  # type: ignore[arg-type]

    @classmethod
    def identity(cls) -> BosonWord:
        return cls(())

    @classmethod
    def number_operator(cls) -> BosonWord:
        return cls((CREATOR, ANNIHILATOR))

    @property
    def creators(self) -> int:
        return self.letters.count(CREATOR)

    @property
    def annihilators(self) -> int:
        return self.letters.count(ANNIHILATOR)

    @property
    def is_balanced(self) -> bool:
        """True when every term of the normal form has r == s."""
        return self.creators == self.annihilators

    def __mul__(self, other: BosonWord) -> BosonWord:
        if not isinstance(other, BosonWord):
            return NotImplemented
        return BosonWord(self.letters + other.letters)

    def __pow__(self, n: int) -> BosonWord:
        if n < 0:
            raise DomainError("negative powers of a boson word are undefined")
        return BosonWord(self.letters * n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)


# Normal forms


def _normalize_coefficient(value: int | Fraction) -> int | Fraction:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _monomial_text(r: int, s: int) -> str:
    parts = []
    if r:
        parts.append("c" if r == 1 else f"c^{r}")
    if s:
        parts.append("a" if s == 1 else f"a^{s}")
    return " ".join(parts)


@dataclass(frozen=True, slots=True)
class NormalForm:
    """
    Σ c_{r,s} (a†)^r a^s with no zero coefficients.

    Terms are stored sorted by (r, s) descending, which is also the rendering order.
    """

    items: tuple[tuple[NormalKey, int | Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: dict[NormalKey, int | Fraction]) -> NormalForm:
        cleaned = []
        for (r, s), coeff in terms.items():
            if r < 0 or s < 0:
                raise DomainError(f"negative power in normal form term ({r}, {s})")
            if coeff != 0:
                cleaned.append(((int(r), int(s)), _normalize_coefficient(coeff)))
        cleaned.sort(key=lambda item: item[0], reverse=True)
        return cls(tuple(cleaned))

    @classmethod
    def identity(cls) -> NormalForm:
        return cls((((0, 0), 1),))

    @classmethod
    def zero(cls) -> NormalForm:
        return cls(())

    @classmethod
    def monomial(cls, r: int, s: int, coefficient: int | Fraction = 1) -> NormalForm:
        return cls.from_terms({(r, s): coefficient})

    @property
    def terms(self) -> dict[NormalKey, int | Fraction]:
        return dict(self.items)

    def coefficient(self, r: int, s: int) -> int | Fraction:
        return self.terms.get((r, s), 0)

    def is_zero(self) -> bool:
        return not self.items

    def push(self, letter: Letter) -> NormalForm:
        """Right-multiply by one letter and re-normal-order."""
        out: dict[NormalKey, int | Fraction] = {}
        for (r, s), coeff in self.items:
            if letter == ANNIHILATOR:
                out[(r, s + 1)] = out.get((r, s + 1), 0) + coeff
            else:
                out[(r + 1, s)] = out.get((r + 1, s), 0) + coeff
                if s:
                    out[(r, s - 1)] = out.get((r, s - 1), 0) + s * coeff
        return NormalForm.from_terms(out)

    def scale(self, factor: Scalar) -> NormalForm:
        f = to_fraction(factor)
        return NormalForm.from_terms({k: c * f for k, c in self.items})

    def __add__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        out = self.terms
        for key, coeff in other.items:
            out[key] = out.get(key, 0) + coeff
        return NormalForm.from_terms(out)

    def __neg__(self) -> NormalForm:
        return self.scale(-1)

    def __sub__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: NormalForm) -> NormalForm:
        """
        Operator product, re-normal-ordered.

        Uses a^s (a†)^r = Σ_k C(s,k) C(r,k) k! (a†)^{r−k} a^{s−k}.
        """
        if not isinstance(other, NormalForm):
            return NotImplemented
        out: dict[NormalKey, int | Fraction] = {}
        for (r1, s1), c1 in self.items:
            for (r2, s2), c2 in other.items:
                for k in range(min(s1, r2) + 1):
                    weight = math.comb(s1, k) * math.comb(r2, k) * math.factorial(k)
                    key = (r1 + r2 - k, s1 + s2 - k)
                    out[key] = out.get(key, 0) + weight * c1 * c2
        return NormalForm.from_terms(out)

    def render(self) -> str:
        """Creators first, terms by (r, s) descending: "c^2 a^2 + c a", "c a + 1"."""
        if not self.items:
            return "0"
        parts: list[str] = []
        for (r, s), coeff in self.items:
            body = _monomial_text(r, s)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude} {body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def to_json_terms(self) -> list[dict[str, int | str]]:
        """[{"r": r, "s": s, "coeff": "decimal or p/q"}] in rendering order."""
        return [{"r": r, "s": s, "coeff": str(coeff)} for (r, s), coeff in self.items]

    def __str__(self) -> str:
        return self.render()


# Rewriting with a bounded prefix memo. Entries are immutable NormalForms.
_PREFIX_CACHE_SIZE = 4096
_prefix_cache: OrderedDict[tuple[Letter, ...], NormalForm] = OrderedDict()
_prefix_lock = threading.Lock()


def _cached(prefix: tuple[Letter, ...]) -> NormalForm | None:
    with _prefix_lock:
        hit = _prefix_cache.get(prefix)
        if hit is not None:
            _prefix_cache.move_to_end(prefix)
        return hit


def _remember(prefix: tuple[Letter, ...], nf: NormalForm) -> None:
    with _prefix_lock:
        _prefix_cache[prefix] = nf
        _prefix_cache.move_to_end(prefix)
        while len(_prefix_cache) > _PREFIX_CACHE_SIZE:
            _prefix_cache.popitem(last=False)


def clear_normal_order_cache() -> None:
    with _prefix_lock:
        _prefix_cache.clear()


def normal_order_cache_info() -> dict[str, int]:
    with _prefix_lock:
        return {"entries": len(_prefix_cache), "capacity": _PREFIX_CACHE_SIZE}


def normal_order(word: BosonWord | str) -> NormalForm:
    """Normal form of a word: every creator to the left of every annihilator."""
    if isinstance(word, str):
        word = BosonWord.parse(word)
    letters = word.letters

    start = len(letters)
    nf = _cached(letters)
    while nf is None and start > 0:
        start -= 1
        nf = _cached(letters[:start])
    if nf is None:
        nf = NormalForm.identity()

    for end in range(start + 1, len(letters) + 1):
        nf = nf.push(letters[end - 1])
        _remember(letters[:end], nf)
    return nf


def normal_order_sum(terms: Iterable[tuple[Scalar, BosonWord | str]]) -> NormalForm:
    """Linear extension of normal_order to Σ cᵢ wᵢ."""
    total = NormalForm.zero()
    for coeff, word in terms:
        total = total + normal_order(word).scale(coeff)
    return total


def normal_order_nhat_power(n: int) -> NormalForm:
    """(a†a)ⁿ = Σₖ S(n,k) (a†)ᵏ aᵏ straight from the Stirling table; n = 0 gives 1."""
    if n == 0:
        return NormalForm.identity()
    row = stirling_row(n)
    return NormalForm.from_terms({(k, k): row[k] for k in range(1, n + 1)})


# Coherent-state expectations


def _ybar_text(r: int, s: int) -> str:
    parts = []
    if r:
        parts.append("zbar" if r == 1 else f"zbar^{r}")
    if s:
        parts.append("z" if s == 1 else f"z^{s}")
    return " ".join(parts)


@dataclass(frozen=True, slots=True)
class CoherentValue:
    """
    Σ c_{r,s} zbar^r z^s with rational coefficients.

    Balanced values (r == s everywhere) are polynomials in ybar = |z|².
    """

    items: tuple[tuple[NormalKey, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: dict[NormalKey, Fraction]) -> CoherentValue:
        cleaned = sorted(
            ((key, Fraction(c)) for key, c in terms.items() if c != 0),
            key=lambda item: item[0],
        )
        return cls(tuple(cleaned))

    @property
    def terms(self) -> dict[NormalKey, Fraction]:
        return dict(self.items)

    @property
    def is_balanced(self) -> bool:
        return all(r == s for (r, s), _ in self.items)

    def ybar_polynomial(self) -> YPolynomial:
        """
        Raises:
            DomainError: the value depends on z and zbar separately
        """
        if not self.is_balanced:
            raise DomainError("expectation of an unbalanced word is not a polynomial in ybar")
        size = max((r for (r, _), _ in self.items), default=-1) + 1
        coeffs = [Fraction(0)] * size
        for (r, _), c in self.items:
            coeffs[r] += c
        return YPolynomial(tuple(coeffs))

    def evaluate(self, z: Scalar) -> Fraction:
        """Value at a real z, where zbar = z."""
        point = to_fraction(z)
        return sum((c * point ** (r + s) for (r, s), c in self.items), Fraction(0))

    def at_ybar(self, ybar: Scalar) -> Fraction:
        return self.ybar_polynomial().evaluate(ybar)

    def render(self) -> str:
        if self.is_balanced:
            return self.ybar_polynomial().render("ybar")
        if not self.items:
            return "0"
        pieces = []
        for (r, s), c in self.items:
            body = _ybar_text(r, s)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            else:
                pieces.append(f"{c} {body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()


def coherent_expectation(
    nf: NormalForm, symbolic: bool = True, z: Scalar | None = None
) -> CoherentValue | Fraction:
    """
    ⟨z|N|z⟩ for a normally ordered N, by (a†)^r a^s → zbar^r z^s.

    With symbolic=False the value is returned as a Fraction at the real point z
    (default 1).
    """
    value = CoherentValue.from_terms({key: Fraction(c) for key, c in nf.items})
    if symbolic:
        return value
    return value.evaluate(1 if z is None else z)


def egf_expectation(
    word: BosonWord | str, order: int = DEFAULT_ORDER, z: Scalar | None = None
) -> ExpSeries:
    """
    Truncated partition-function integrand ⟨z|exp(xw)|z⟩ = Σ ⟨z|wⁿ|z⟩ xⁿ/n!.

    Without z the word must be balanced and coefficients are polynomials in
    ybar; with a real z the coefficients are rationals at that point.

    Raises:
        DomainError: negative order, or symbolic mode on an unbalanced word
    """
    if isinstance(word, str):
        word = BosonWord.parse(word)
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    if z is None and not word.is_balanced:
        raise DomainError(
            f"word {str(word)!r} is unbalanced; pass a real z to evaluate its expectation"
        )

    coeffs: list[YPolynomial | Fraction] = []
    for n in range(order + 1):
        nf = normal_order(word**n)
        value = coherent_expectation(nf)
        assert isinstance(value, CoherentValue)
        coeffs.append(value.ybar_polynomial() if z is None else value.evaluate(z))
    logger.debug(f"egf_expectation word={word!s} order={order} symbolic={z is None}")
    return ExpSeries(tuple(coeffs), "ypoly" if z is None else "rational")


# Truncated Fock-space oracle


class FockEstimate(BaseModel):
    """Numeric ⟨z|wⁿ|z⟩ from a truncated Fock space."""

    value: float
    error_estimate: float
    dimension: int
    tail_mass: float


def annihilation_matrix(dim: int) -> np.ndarray:
    """a on span{|0⟩..|dim−1⟩}: a|k⟩ = √k |k−1⟩."""
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1)


def coherent_state_vector(z: float, dim: int) -> tuple[np.ndarray, float]:
    """
    e^{-|z|²/2} Σ zᵏ/√k! |k⟩ cut at dim, renormalized.

    Returns:
        (unit vector, probability mass lost to the cut)
    """
    if dim < 1:
        raise DomainError("Fock dimension must be at least 1")
    ratios = z / np.sqrt(np.arange(1, dim, dtype=float))
    amplitudes = math.exp(-z * z / 2) * np.concatenate(([1.0], np.cumprod(ratios)))
    kept = float(amplitudes @ amplitudes)
    return amplitudes / math.sqrt(kept), max(0.0, 1.0 - kept)


def _truncated_expectation(letters: tuple[Letter, ...], z: float, dim: int) -> tuple[float, float]:
    a = annihilation_matrix(dim)
    adag = a.T
    psi, tail = coherent_state_vector(z, dim)
    v = psi
    for letter in reversed(letters):
        v = (a if letter == ANNIHILATOR else adag) @ v
    return float(psi @ v), tail


def fock_oracle_expectation(
    word: BosonWord | str,
    n: int,
    zreal: Scalar | float,
    dim: int = 32,
    tolerance: float = 1e-9,
    pad: int = 8,
) -> FockEstimate:
    """
    ⟨z|wⁿ|z⟩ evaluated with dim×dim matrices for a and a†.

    The error estimate is the change when the space grows by `pad` levels
    plus the truncated tail mass times the value.

    Raises:
        ConvergenceError: estimate above tolerance (dim too small)
    """
    if isinstance(word, str):
        word = BosonWord.parse(word)
    if n < 0:
        raise DomainError(f"power must be non-negative, got {n}")
    z = float(zreal)
    letters = (word**n).letters

    value, tail = _truncated_expectation(letters, z, dim)
    wider, _ = _truncated_expectation(letters, z, dim + pad)
    error = abs(value - wider) + tail * abs(value)
    logger.debug(f"Fock oracle word={word!s} n={n} z={z} dim={dim} value={value} error={error}")

    if error > tolerance:
        raise ConvergenceError(
            f"Fock dimension {dim} too small for {word!s}^{n} at z={z}: "
            f"error estimate {error:.3e} exceeds {tolerance:.1e}"
        )
    return FockEstimate(value=value, error_estimate=error, dimension=dim, tail_mass=tail)
