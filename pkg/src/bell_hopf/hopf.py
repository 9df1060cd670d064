"""
The Hopf algebras POLY and BELL.

Both are the free commutative algebra over a graded alphabet with primitive
generators: POLY uses the single letter y1, BELL the letters y1, y2, ….
Basis monomials ("forests") carry weight Σ k·mₖ and degree Σ mₖ.

    Δ(yₖ) = yₖ ⊗ e + e ⊗ yₖ        ε(e) = 1, ε(m) = 0 otherwise
    S(m)  = (−1)^degree(m) · m

Elements have Fraction coefficients and are kept in expanded canonical form so
axiom checks can compare them with ==.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from collections.abc import Callable
from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel
from pydantic import Field
from sympy.utilities.iterables import partitions

from .errors import DomainError
from .errors import ElementParseError
from .logging_config import get_logger
from .polynomial import Scalar
from .polynomial import to_fraction

logger = get_logger("hopf")

# Both coproduct paths are compared up to this weight.
COPRODUCT_PATH_BOUND = 6


class AlphabetSpec(StrEnum):
    POLY = "poly"
    BELL = "bell"

    def admits(self, monomial: Monomial) -> bool:
        return self is AlphabetSpec.BELL or all(k == 1 for k, _ in monomial.exponents)

    def validate(self, element: AlgebraElement) -> AlgebraElement:
        for m, _ in element.items:
            if not self.admits(m):
                raise DomainError(f"{m} is not in POLY (only y1 is a generator)")
        return element

    def basis(self, weight: int) -> list[Monomial]:
        """Basis monomials of exactly this weight, in canonical order."""
        if weight < 0:
            raise DomainError(f"weight must be non-negative, got {weight}")
        if weight == 0:
            return [Monomial.unit()]
        if self is AlphabetSpec.POLY:
            return [Monomial.from_exponents({1: weight})]
        found = [Monomial.from_exponents(dict(p)) for p in partitions(weight)]
        return sorted(found, key=Monomial.sort_key)

    def basis_up_to(self, weight_bound: int) -> list[Monomial]:
        """Non-unit basis monomials of weight 1..weight_bound."""
        return [m for w in range(1, weight_bound + 1) for m in self.basis(w)]


@dataclass(frozen=True, slots=True)
class Monomial:
    """∏ yₖ^{mₖ} stored as ((k, mₖ), …) by increasing k; () is the unit e."""

    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def unit(cls) -> Monomial:
        return cls(())

    @classmethod
    def letter(cls, k: int) -> Monomial:
        return cls.from_exponents({k: 1})

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> Monomial:
        cleaned = []
        for k, m in sorted(exponents.items()):
            if k < 1:
                raise DomainError(f"generator index must be >= 1, got y{k}")
            if m < 0:
                raise DomainError(f"negative exponent on y{k}")
            if m:
                cleaned.append((int(k), int(m)))
        return cls(tuple(cleaned))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> Monomial:
        counts: dict[int, int] = {}
        for k in letters:
            counts[k] = counts.get(k, 0) + 1
        return cls.from_exponents(counts)

    @property
    def weight(self) -> int:
        return sum(k * m for k, m in self.exponents)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.exponents)

    @property
    def letters(self) -> tuple[int, ...]:
        """Generator indices with repetition, ascending."""
        return tuple(k for k, m in self.exponents for _ in range(m))

    def is_unit(self) -> bool:
        return not self.exponents

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.weight, self.letters)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        merged = dict(self.exponents)
        for k, m in other.exponents:
            merged[k] = merged.get(k, 0) + m
        return Monomial.from_exponents(merged)

    def __str__(self) -> str:
        if not self.exponents:
            return "e"
        return "*".join(f"y{k}" if m == 1 else f"y{k}^{m}" for k, m in self.exponents)


def _coefficient_prefix(coeff: Fraction, body: str) -> str:
    magnitude = abs(coeff)
    if body == "e":
        return str(magnitude) if magnitude != 1 else "e"
    return body if magnitude == 1 else f"{magnitude}*{body}"


def _join_signed(pieces: list[tuple[Fraction, str]]) -> str:
    if not pieces:
        return "0"
    out: list[str] = []
    for coeff, text in pieces:
        if not out:
            out.append(text if coeff > 0 else f"-{text}")
        else:
            out.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(out)


@dataclass(frozen=True, slots=True)
class AlgebraElement:
    """Finite Σ c·m over basis monomials, zero coefficients dropped."""

    items: tuple[tuple[Monomial, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Scalar]) -> AlgebraElement:
        cleaned = [(m, to_fraction(c)) for m, c in terms.items() if c != 0]
        cleaned.sort(key=lambda item: item[0].sort_key())
        return cls(tuple(cleaned))

    @classmethod
    def zero(cls) -> AlgebraElement:
        return cls(())

    @classmethod
    def unit(cls) -> AlgebraElement:
        return cls.of(Monomial.unit())

    @classmethod
    def of(cls, monomial: Monomial, coefficient: Scalar = 1) -> AlgebraElement:
        return cls.from_terms({monomial: coefficient})

    @classmethod
    def letter(cls, k: int) -> AlgebraElement:
        return cls.of(Monomial.letter(k))

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.items

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(monomial, Fraction(0))

    def scale(self, factor: Scalar) -> AlgebraElement:
        f = to_fraction(factor)
        return AlgebraElement.from_terms({m: c * f for m, c in self.items})

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = self.terms
        for m, c in other.items:
            out[m] = out.get(m, Fraction(0)) + c
        return AlgebraElement.from_terms(out)

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return product(self, other)

    def render(self) -> str:
        return _join_signed([(c, _coefficient_prefix(c, str(m))) for m, c in self.items])

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, slots=True)
class TensorElement:
    """Σ c·(m₁ ⊗ … ⊗ m_k) for a fixed arity k (2 for Δ, 3 for iterated Δ)."""

    arity: int
    items: tuple[tuple[tuple[Monomial, ...], Fraction], ...] = ()

    @classmethod
    def from_terms(
        cls, terms: Mapping[tuple[Monomial, ...], Scalar], arity: int = 2
    ) -> TensorElement:
        cleaned = []
        for key, c in terms.items():
            if len(key) != arity:
                raise DomainError(f"tensor key {key} does not have arity {arity}")
            if c != 0:
                cleaned.append((tuple(key), to_fraction(c)))
        cleaned.sort(key=lambda item: tuple(m.sort_key() for m in item[0]))
        return cls(arity, tuple(cleaned))

    @classmethod
    def pure(cls, *factors: Monomial, coefficient: Scalar = 1) -> TensorElement:
        return cls.from_terms({tuple(factors): coefficient}, arity=len(factors))

    @property
    def terms(self) -> dict[tuple[Monomial, ...], Fraction]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.items

    def _check_arity(self, other: TensorElement) -> None:
        if self.arity != other.arity:
            raise DomainError(f"tensor arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: TensorElement) -> TensorElement:
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_arity(other)
        out = self.terms
        for key, c in other.items:
            out[key] = out.get(key, Fraction(0)) + c
        return TensorElement.from_terms(out, self.arity)

    def scale(self, factor: Scalar) -> TensorElement:
        f = to_fraction(factor)
        return TensorElement.from_terms({k: c * f for k, c in self.items}, self.arity)

    def __mul__(self, other: TensorElement) -> TensorElement:
        """Factor-wise product (A⊗B)(C⊗D) = AC ⊗ BD."""
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_arity(other)
        out: dict[tuple[Monomial, ...], Fraction] = {}
        for k1, c1 in self.items:
            for k2, c2 in other.items:
                key = tuple(a * b for a, b in zip(k1, k2, strict=True))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return TensorElement.from_terms(out, self.arity)

    def swap(self) -> TensorElement:
        """Reverse the tensor factors (the flip τ for arity 2)."""
        return TensorElement.from_terms({k[::-1]: c for k, c in self.items}, self.arity)

    def map_at(self, index: int, f: Callable[[Monomial], AlgebraElement]) -> TensorElement:
        """Apply a linear map to one factor, keeping the arity."""
        out: dict[tuple[Monomial, ...], Fraction] = {}
        for key, c in self.items:
            for m, cm in f(key[index]).items:
                new_key = key[:index] + (m,) + key[index + 1 :]
                out[new_key] = out.get(new_key, Fraction(0)) + c * cm
        return TensorElement.from_terms(out, self.arity)

    def expand_at(self, index: int, f: Callable[[Monomial], TensorElement]) -> TensorElement:
        """Replace one factor by a tensor, e.g. Δ ⊗ id raises arity 2 to 3."""
        out: dict[tuple[Monomial, ...], Fraction] = {}
        arity: int | None = None
        for key, c in self.items:
            image = f(key[index])
            arity = self.arity - 1 + image.arity
            for sub, cs in image.items:
                new_key = key[:index] + sub + key[index + 1 :]
                out[new_key] = out.get(new_key, Fraction(0)) + c * cs
        return TensorElement.from_terms(out, arity if arity is not None else self.arity + 1)

    def contract_at(self, index: int, f: Callable[[Monomial], Fraction]) -> TensorElement:
        """Apply a linear functional to one factor, lowering the arity by one."""
        out: dict[tuple[Monomial, ...], Fraction] = {}
        for key, c in self.items:
            value = f(key[index])
            if value:
                new_key = key[:index] + key[index + 1 :]
                out[new_key] = out.get(new_key, Fraction(0)) + c * value
        return TensorElement.from_terms(out, self.arity - 1)

    def multiply(self) -> AlgebraElement:
        """m: collapse all factors with the algebra product."""
        out: dict[Monomial, Fraction] = {}
        for key, c in self.items:
            m = Monomial.unit()
            for factor in key:
                m = m * factor
            out[m] = out.get(m, Fraction(0)) + c
        return AlgebraElement.from_terms(out)

    def as_element(self) -> AlgebraElement:
        """View an arity-1 tensor as an algebra element."""
        if self.arity != 1:
            raise DomainError(f"only arity-1 tensors are algebra elements, got {self.arity}")
        return AlgebraElement.from_terms({k[0]: c for k, c in self.items})

    def render(self) -> str:
        pieces = []
        for key, c in self.items:
            body = " (x) ".join(str(m) for m in key)
            magnitude = abs(c)
            pieces.append((c, body if magnitude == 1 else f"{magnitude}*{body}"))
        return _join_signed(pieces)

    def __str__(self) -> str:
        return self.render()


# Structure maps


def product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the monomial merge; commutative with unit e."""
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.items:
        for m2, c2 in b.items:
            m = m1 * m2
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return AlgebraElement.from_terms(out)


def monomial_coproduct(m: Monomial) -> TensorElement:
    """
    Δ(∏ yₖ^{mₖ}) = Σ_{0≤jₖ≤mₖ} ∏ C(mₖ,jₖ) · ∏ yₖ^{jₖ} ⊗ ∏ yₖ^{mₖ−jₖ}.
    """
    indices = [k for k, _ in m.exponents]
    ranges = [range(mult + 1) for _, mult in m.exponents]
    out: dict[tuple[Monomial, ...], Fraction] = {}
    for choice in itertools.product(*ranges):
        weight = math.prod(math.comb(mult, j) for (_, mult), j in zip(m.exponents, choice, strict=True))
        left = Monomial.from_exponents(dict(zip(indices, choice, strict=True)))
        right = Monomial.from_exponents(
            {k: mult - j for (k, mult), j in zip(m.exponents, choice, strict=True)}
        )
        out[(left, right)] = out.get((left, right), Fraction(0)) + weight
    return TensorElement.from_terms(out, 2)


def coproduct(a: AlgebraElement) -> TensorElement:
    """Δ by multiset splitting, extended linearly."""
    total = TensorElement(2)
    for m, c in a.items:
        total = total + monomial_coproduct(m).scale(c)
    return total


def coproduct_by_homomorphism(a: AlgebraElement) -> TensorElement:
    """Δ as the product of Δ(yₖ) = yₖ⊗e + e⊗yₖ over letters."""
    e = Monomial.unit()
    total = TensorElement(2)
    for m, c in a.items:
        image = TensorElement.pure(e, e)
        for k in m.letters:
            y = Monomial.letter(k)
            image = image * (TensorElement.pure(y, e) + TensorElement.pure(e, y))
        total = total + image.scale(c)
    return total


def counit(a: AlgebraElement) -> Fraction:
    """ε: coefficient of e."""
    return a.coefficient(Monomial.unit())


def _counit_monomial(m: Monomial) -> Fraction:
    return Fraction(1) if m.is_unit() else Fraction(0)


def antipode_monomial(m: Monomial) -> AlgebraElement:
    return AlgebraElement.of(m, -1 if m.degree % 2 else 1)


def antipode(a: AlgebraElement) -> AlgebraElement:
    """S(m) = (−1)^degree(m)·m on monomials, linear on sums."""
    return AlgebraElement.from_terms({m: -c if m.degree % 2 else c for m, c in a.items})


def _identity_monomial(m: Monomial) -> AlgebraElement:
    return AlgebraElement.of(m)


def convolve_antipode_id(a: AlgebraElement) -> AlgebraElement:
    """m∘(S⊗id)∘Δ; equals ε(a)·e in a Hopf algebra."""
    return coproduct(a).map_at(0, antipode_monomial).multiply()


def convolve_id_antipode(a: AlgebraElement) -> AlgebraElement:
    """m∘(id⊗S)∘Δ."""
    return coproduct(a).map_at(1, antipode_monomial).multiply()


def grade_components(a: AlgebraElement) -> dict[int, AlgebraElement]:
    """Homogeneous weight components, by increasing weight."""
    buckets: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in a.items:
        buckets.setdefault(m.weight, {})[m] = c
    return {w: AlgebraElement.from_terms(buckets[w]) for w in sorted(buckets)}


def factorize(m: Monomial) -> tuple[Monomial, ...]:
    """Single-letter factors whose product is m (connected pieces of a forest)."""
    return tuple(Monomial.letter(k) for k in m.letters)


# Element syntax: `e`, `y1`, `y2^3`, `3/2*y1^2*y3 + y2`

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<letter>y(?P<index>\d+))|(?P<unit>e)"
    r"|(?P<caret>\^)|(?P<star>\*)|(?P<plus>\+)|(?P<minus>-)"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ElementParseError(f"unexpected character {text[pos]!r} in {text!r}", text, pos + 1)
        kind = match.lastgroup
        if kind == "index":
            kind = "letter"
        if kind != "ws":
            tokens.append((kind or "", match.group(), pos + 1))
        pos = match.end()
    return tokens


def parse_element(text: str, alphabet: AlphabetSpec = AlphabetSpec.BELL) -> AlgebraElement:
    """
    Parse `3/2*y1^2*y3 + y2 - e` into an AlgebraElement.

    Raises:
        ElementParseError: malformed text, with the 1-based position
        DomainError: a letter outside the alphabet (y2 in POLY)
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ElementParseError(f"empty element text {text!r}", text, 1)

    total: dict[Monomial, Fraction] = {}
    i = 0
    sign = 1
    if tokens[0][0] in ("plus", "minus"):
        sign = -1 if tokens[0][0] == "minus" else 1
        i = 1

    while True:
        coeff = Fraction(sign)
        mono = Monomial.unit()
        expect_factor = True
        while expect_factor:
            if i >= len(tokens):
                raise ElementParseError(f"expected a factor at end of {text!r}", text, len(text) + 1)
            kind, value, pos = tokens[i]
            if kind == "num":
                coeff *= Fraction(value)
                i += 1
            elif kind == "unit":
                i += 1
            elif kind == "letter":
                index = int(value[1:])
                if index < 1:
                    raise ElementParseError(f"generator index must be >= 1 in {text!r}", text, pos)
                power = 1
                i += 1
                if i < len(tokens) and tokens[i][0] == "caret":
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                        at = tokens[i + 1][2] if i + 1 < len(tokens) else len(text) + 1
                        raise ElementParseError(f"expected an integer exponent in {text!r}", text, at)
                    power = int(tokens[i + 1][1])
                    i += 2
                mono = mono * Monomial.from_exponents({index: power})
            else:
                raise ElementParseError(f"unexpected {value!r} in {text!r}", text, pos)
            if i < len(tokens) and tokens[i][0] == "star":
                i += 1
            else:
                expect_factor = False

        total[mono] = total.get(mono, Fraction(0)) + coeff
        if i >= len(tokens):
            break
        kind, value, pos = tokens[i]
        if kind not in ("plus", "minus"):
            raise ElementParseError(f"expected '+' or '-' before {value!r} in {text!r}", text, pos)
        sign = -1 if kind == "minus" else 1
        i += 1

    return alphabet.validate(AlgebraElement.from_terms(total))


# Axiom checks


class AxiomResult(BaseModel):
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None


class HopfAxiomReport(BaseModel):
    alphabet: str
    weight_bound: int
    monomials_checked: int = Field(description="Non-unit basis monomials (e is checked in addition)")
    random_samples: int
    axioms: list[AxiomResult]
    passed: bool


def _first_failure(
    name: str, elements: list[AlgebraElement], check: Callable[[AlgebraElement], str | None]
) -> AxiomResult:
    for element in elements:
        problem = check(element)
        if problem is not None:
            return AxiomResult(name=name, passed=False, checked=len(elements), counterexample=problem)
    return AxiomResult(name=name, passed=True, checked=len(elements))


def _coassociativity(a: AlgebraElement) -> str | None:
    delta = coproduct(a)
    left = delta.expand_at(0, monomial_coproduct)
    right = delta.expand_at(1, monomial_coproduct)
    return None if left == right else f"{a}: (Δ⊗id)Δ = {left} but (id⊗Δ)Δ = {right}"


def _counit_left(a: AlgebraElement) -> str | None:
    got = coproduct(a).contract_at(0, _counit_monomial).as_element()
    return None if got == a else f"{a}: (ε⊗id)Δ = {got}"


def _counit_right(a: AlgebraElement) -> str | None:
    got = coproduct(a).contract_at(1, _counit_monomial).as_element()
    return None if got == a else f"{a}: (id⊗ε)Δ = {got}"


def _antipode_left(a: AlgebraElement) -> str | None:
    got = convolve_antipode_id(a)
    want = AlgebraElement.unit().scale(counit(a))
    return None if got == want else f"{a}: m(S⊗id)Δ = {got}, expected {want}"


def _antipode_right(a: AlgebraElement) -> str | None:
    got = convolve_id_antipode(a)
    want = AlgebraElement.unit().scale(counit(a))
    return None if got == want else f"{a}: m(id⊗S)Δ = {got}, expected {want}"


def _cocommutativity(a: AlgebraElement) -> str | None:
    delta = coproduct(a)
    flipped = delta.swap()
    return None if delta == flipped else f"{a}: Δ = {delta} but τΔ = {flipped}"


def _grading(a: AlgebraElement) -> str | None:
    for m, _ in a.items:
        for (left, right), _ in monomial_coproduct(m).items:
            if left.weight + right.weight != m.weight:
                return f"Δ({m}) has term {left} (x) {right} of the wrong weight"
    if grade_components(antipode(a)).keys() != grade_components(a).keys():
        return f"{a}: antipode changed the weight components"
    return None


def _sign_law(a: AlgebraElement) -> str | None:
    for m, _ in a.items:
        got = antipode(AlgebraElement.of(m))
        want = AlgebraElement.of(m, (-1) ** m.degree)
        if got != want:
            return f"S({m}) = {got}, expected {want}"
    return None


def _coproduct_paths(a: AlgebraElement) -> str | None:
    if any(m.weight > COPRODUCT_PATH_BOUND for m, _ in a.items):
        return None
    split = coproduct(a)
    multiplied = coproduct_by_homomorphism(a)
    return None if split == multiplied else f"{a}: splitting gives {split}, products give {multiplied}"


def _homomorphism_pair(pair: tuple[AlgebraElement, AlgebraElement]) -> str | None:
    a, b = pair
    lhs = coproduct(product(a, b))
    rhs = coproduct(a) * coproduct(b)
    return None if lhs == rhs else f"Δ(({a})({b})) = {lhs} but Δ({a})Δ({b}) = {rhs}"


_ELEMENT_AXIOMS: dict[str, Callable[[AlgebraElement], str | None]] = {
    "coassociativity": _coassociativity,
    "counit_left": _counit_left,
    "counit_right": _counit_right,
    "antipode_left": _antipode_left,
    "antipode_right": _antipode_right,
    "cocommutativity": _cocommutativity,
    "grading": _grading,
    "antipode_sign_law": _sign_law,
    "coproduct_paths": _coproduct_paths,
}

AXIOM_NAMES: tuple[str, ...] = (*_ELEMENT_AXIOMS, "homomorphism")


def _run_axiom(
    job: tuple[str, list[AlgebraElement], list[tuple[AlgebraElement, AlgebraElement]]],
) -> AxiomResult:
    name, elements, pairs = job
    if name == "homomorphism":
        for pair in pairs:
            problem = _homomorphism_pair(pair)
            if problem is not None:
                return AxiomResult(name=name, passed=False, checked=len(pairs), counterexample=problem)
        return AxiomResult(name=name, passed=True, checked=len(pairs))
    return _first_failure(name, elements, _ELEMENT_AXIOMS[name])


def random_elements(
    alphabet: AlphabetSpec, weight_bound: int, samples: int, seed: int
) -> list[AlgebraElement]:
    """Reproducible random linear combinations of basis monomials with small rationals."""
    rng = random.Random(seed)
    pool = [Monomial.unit(), *alphabet.basis_up_to(weight_bound)]
    out = []
    for _ in range(samples):
        size = rng.randint(1, min(4, len(pool)))
        picks = rng.sample(pool, size)
        terms = {m: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for m in picks}
        out.append(AlgebraElement.from_terms(terms))
    return out


def _iter_basis_pairs(basis: list[Monomial], weight_bound: int) -> Iterator[tuple[AlgebraElement, AlgebraElement]]:
    for m1, m2 in itertools.combinations_with_replacement(basis, 2):
        if m1.weight + m2.weight <= weight_bound:
            yield AlgebraElement.of(m1), AlgebraElement.of(m2)


def check_hopf_axioms(
    weight_bound: int,
    alphabet: AlphabetSpec | str = AlphabetSpec.BELL,
    samples: int = 100,
    seed: int = 20260101,
    max_workers: int = 1,
) -> HopfAxiomReport:
    """
    Verify the Hopf axioms on every basis monomial of weight ≤ weight_bound
    (plus e) and on `samples` random linear combinations.

    Checked: coassociativity, both counit laws, both antipode convolutions,
    co-commutativity, Δ(AB) = Δ(A)Δ(B), weight grading, the antipode sign law
    and agreement of the two coproduct computations. Axioms are independent
    jobs; with max_workers > 1 they run in a process pool and are reported in
    a fixed order.
    """
    if weight_bound < 0:
        raise DomainError(f"weight bound must be non-negative, got {weight_bound}")
    alphabet = AlphabetSpec(alphabet)

    basis = alphabet.basis_up_to(weight_bound)
    with_unit = [Monomial.unit(), *basis]
    sampled = random_elements(alphabet, weight_bound, samples, seed) if weight_bound else []
    elements = [AlgebraElement.of(m) for m in with_unit] + sampled
    pairs = list(_iter_basis_pairs(with_unit, weight_bound))
    pairs += list(zip(sampled[::2], sampled[1::2], strict=False))

    jobs = [(name, elements, pairs) for name in AXIOM_NAMES]
    logger.debug(
        f"Hopf check {alphabet.value} bound={weight_bound}: "
        f"{len(basis)} monomials, {len(sampled)} samples, {len(pairs)} pairs"
    )
    if max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(_run_axiom, jobs))
    else:
        results = [_run_axiom(job) for job in jobs]

    for result in results:
        if not result.passed:
            logger.warning(f"Axiom {result.name} failed: {result.counterexample}")

    return HopfAxiomReport(
        alphabet=alphabet.value,
        weight_bound=weight_bound,
        monomials_checked=len(basis),
        random_samples=len(sampled),
        axioms=results,
        passed=all(r.passed for r in results),
    )
