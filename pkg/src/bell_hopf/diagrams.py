"""
Labeled diagrams: n white dots, each sending one line into a black dot.

A labeled diagram is exactly a set partition of the line labels {1,…,n} (one
block per black dot). Its shape is the multiset of black-dot degrees, coded as
the monomial ∏ y_k in the BELL alphabet.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Literal

from sympy.utilities.iterables import partitions

from .combinatorics import SetPartition
from .combinatorics import enumerate_set_partitions
from .errors import BoundExceededError
from .errors import DomainError
from .hopf import Monomial
from .logging_config import get_logger

logger = get_logger("diagrams")

ENUMERATED_MULTIPLICITY_BOUND = 10

CensusMethod = Literal["closed", "enumerate"]


@dataclass(frozen=True, slots=True)
class LabeledDiagram:
    """One black dot per block; line i runs from white dot i to the block holding i."""

    partition: SetPartition

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> LabeledDiagram:
        return cls(SetPartition.from_blocks([tuple(b) for b in blocks]))

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.partition.blocks

    def black_dot_of(self, label: int) -> int:
        """1-based index of the black dot receiving line `label`."""
        for index, block in enumerate(self.blocks, start=1):
            if label in block:
                return index
        raise DomainError(f"line {label} is not part of a diagram on {self.n} lines")

    def __str__(self) -> str:
        return str(self.partition)


@dataclass(frozen=True, slots=True)
class DiagramShape:
    """Multiset of black-dot degrees, sorted descending; () is the empty diagram."""

    parts: tuple[int, ...] = ()

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> DiagramShape:
        items = tuple(sorted(parts, reverse=True))
        if any(p < 1 for p in items):
            raise DomainError(f"shape parts must be positive, got {items}")
        return cls(items)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def components(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """k -> number of black dots of degree k, ascending k."""
        return dict(sorted(Counter(self.parts).items()))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.parts)) + "}"


def enumerate_labeled_diagrams(n: int) -> Iterator[LabeledDiagram]:
    """bell(n) diagrams in restricted-growth order; n = 0 yields the empty diagram."""
    for partition in enumerate_set_partitions(n):
        yield LabeledDiagram(partition)


def shape_of(diagram: LabeledDiagram) -> DiagramShape:
    return DiagramShape.from_parts(diagram.partition.block_sizes)


def code_monomial(shape: DiagramShape) -> Monomial:
    """∏ y_k over the parts; weight and letter count follow the shape."""
    return Monomial.from_letters(shape.parts)


def decode_monomial(monomial: Monomial) -> DiagramShape:
    return DiagramShape.from_parts(monomial.letters)


def shape_multiplicity(shape: DiagramShape) -> int:
    """Labeled diagrams with this shape: n! / ∏ₖ (k!)^{mₖ} mₖ!."""
    denominator = 1
    for k, m in shape.multiplicities().items():
        denominator *= math.factorial(k) ** m * math.factorial(m)
    return math.factorial(shape.weight) // denominator


def shape_multiplicity_enumerated(
    shape: DiagramShape, bound: int = ENUMERATED_MULTIPLICITY_BOUND
) -> int:
    """
    Count by brute-force enumeration.

    Raises:
        BoundExceededError: weight above `bound`
    """
    if shape.weight > bound:
        raise BoundExceededError(
            f"enumerated multiplicity needs weight <= {bound}, got {shape.weight}"
        )
    return sum(1 for d in enumerate_labeled_diagrams(shape.weight) if shape_of(d) == shape)


def census_key(shape: DiagramShape) -> tuple[int, tuple[int, ...]]:
    return code_monomial(shape).sort_key()


def enumerate_shapes(n: int) -> list[DiagramShape]:
    """Integer partitions of n as shapes, in census order."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n == 0:
        return [DiagramShape()]
    # sympy reuses the yielded dict
    shapes = [
        DiagramShape.from_parts(k for k, m in p.items() for _ in range(m))
        for p in (dict(q) for q in partitions(n))
    ]
    return sorted(shapes, key=census_key)


def shape_census(n: int, method: CensusMethod = "closed") -> list[tuple[DiagramShape, int]]:
    """
    (shape, labeled count) for every shape of weight n, in census order.

    "closed" uses the multiplicity formula over integer partitions;
    "enumerate" tallies shapes of the bell(n) enumerated diagrams.
    """
    if method == "closed":
        return [(s, shape_multiplicity(s)) for s in enumerate_shapes(n)]
    if method == "enumerate":
        counts = Counter(shape_of(d) for d in enumerate_labeled_diagrams(n))
        logger.debug(f"Shape census n={n}: {sum(counts.values())} diagrams, {len(counts)} shapes")
        return sorted(counts.items(), key=lambda item: census_key(item[0]))
    raise DomainError(f"unknown census method {method!r}")


def format_census(census: list[tuple[DiagramShape, int]]) -> str:
    """"y1^3:1, y1*y2:3, y3:1"."""
    return ", ".join(f"{code_monomial(s)}:{count}" for s, count in census)


def to_dot(diagram: LabeledDiagram, name: str = "diagram") -> str:
    """
    Undirected DOT graph: white nodes w1…wn, black nodes b1…bk ordered by least
    contained label, one edge per line.
    """
    lines = [
        f"graph {name} {{",
        '  node [shape=circle, label="", width=0.2];',
    ]
    for label in range(1, diagram.n + 1):
        lines.append(f"  w{label} [style=filled, fillcolor=white];")
    for index in range(1, len(diagram.blocks) + 1):
        lines.append(f"  b{index} [style=filled, fillcolor=black];")
    for index, block in enumerate(diagram.blocks, start=1):
        for label in block:
            lines.append(f"  w{label} -- b{index};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot_bundle(diagrams: Iterable[LabeledDiagram]) -> str:
    """One graph per diagram, named d1, d2, … in stream order."""
    return "\n".join(to_dot(d, name=f"d{i}") for i, d in enumerate(diagrams, start=1))
