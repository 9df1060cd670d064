"""
Exact Stirling numbers of the second kind, Bell numbers and Bell polynomials,
plus a set-partition enumerator that serves as the oracle for everything that
counts diagrams downstream.
"""

from __future__ import annotations

import threading
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import DomainError
from .logging_config import get_logger
from .polynomial import YPolynomial

logger = get_logger("combinatorics")

PRACTICAL_ENUMERATION_BOUND = 12

# Row n holds S(n, 0..n). Grown under the lock, read-only afterwards.
_stirling_table: list[tuple[int, ...]] = [(1,)]
_stirling_lock = threading.Lock()


def _check_index(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


def stirling_row(n: int) -> tuple[int, ...]:
    """
    Return (S(n,0), ..., S(n,n)).

    Rows come from S(n,k) = k·S(n−1,k) + S(n−1,k−1), S(0,0) = 1, and are
    memoized for the lifetime of the process.
    """
    _check_index("n", n)
    if n < len(_stirling_table):
        return _stirling_table[n]
    with _stirling_lock:
        while len(_stirling_table) <= n:
            prev = _stirling_table[-1]
            m = len(prev)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                above = prev[k] if k < m else 0
                row[k] = k * above + prev[k - 1]
            _stirling_table.append(tuple(row))
        logger.debug(f"Stirling table extended to n={len(_stirling_table) - 1}")
    return _stirling_table[n]


def stirling2(n: int, k: int) -> int:
    """
    Number of ways to put n labeled objects into k unlabeled non-empty boxes.

    Raises:
        DomainError: k > n or a negative index
    """
    _check_index("n", n)
    _check_index("k", k)
    if k > n:
        raise DomainError(f"stirling2 requires k <= n, got n={n}, k={k}")
    return stirling_row(n)[k]


def bell(n: int) -> int:
    """B(n) = Σₖ S(n,k), with B(0) = 1."""
    return sum(stirling_row(n))


def bell_numbers(n_max: int) -> list[int]:
    """[B(0), ..., B(n_max)]."""
    _check_index("n_max", n_max)
    return [bell(n) for n in range(n_max + 1)]


def bell_polynomial(n: int) -> YPolynomial:
    """Bₙ(y) = Σₖ S(n,k) yᵏ."""
    return YPolynomial.from_coefficients(stirling_row(n))


@dataclass(frozen=True, slots=True)
class SetPartition:
    """A partition of {1,…,n} into non-empty blocks, blocks sorted by least element."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: object) -> SetPartition:
        """
        Validate and canonicalize arbitrary blocks.

        Raises:
            DomainError: empty block, overlap, or labels not exactly {1,…,n}
        """
        normalized: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for block in blocks:  # type: ignore[attr-defined]
            items = tuple(sorted(block))
            if not items:
                raise DomainError("set partition blocks must be non-empty")
            overlap = seen.intersection(items)
            if overlap or len(set(items)) != len(items):
                raise DomainError(f"blocks overlap on {sorted(overlap) or items}")
            seen.update(items)
            normalized.append(items)
        n = len(seen)
        if seen != set(range(1, n + 1)):
            raise DomainError(f"blocks must cover 1..{n}, got {sorted(seen)}")
        normalized.sort(key=lambda b: b[0])
        return cls(n=n, blocks=tuple(normalized))

    @classmethod
    def from_growth_word(cls, word: tuple[int, ...] | list[int]) -> SetPartition:
        """Build from a restricted growth word (a₁=0, aᵢ ≤ 1 + max of earlier)."""
        blocks: list[list[int]] = []
        for label, block_index in enumerate(word, start=1):
            if block_index == len(blocks):
                blocks.append([label])
            elif 0 <= block_index < len(blocks):
                blocks[block_index].append(label)
            else:
                raise DomainError(f"not a restricted growth word: {list(word)}")
        return cls(n=len(word), blocks=tuple(tuple(b) for b in blocks))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def growth_word(self) -> tuple[int, ...]:
        word = [0] * self.n
        for index, block in enumerate(self.blocks):
            for label in block:
                word[label - 1] = index
        return tuple(word)

    def __str__(self) -> str:
        if not self.blocks:
            return "{}"
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def enumerate_set_partitions(n: int) -> Iterator[SetPartition]:
    """
    Yield every set partition of {1,…,n} once, in lexicographic order of
    restricted growth words (so {1,…,n} as one block comes first).

    The stream has bell(n) items; n <= 12 is the practical bound.
    """
    _check_index("n", n)
    if n > PRACTICAL_ENUMERATION_BOUND:
        logger.warning(f"Enumerating B({n}) = {bell(n)} set partitions; this will be slow")
    if n == 0:
        yield SetPartition(n=0, blocks=())
        return

    word = [0] * n
    # prefix_max[i] = max(word[0..i])
    prefix_max = [0] * n
    while True:
        yield SetPartition.from_growth_word(word)
        i = n - 1
        while i > 0 and word[i] > prefix_max[i - 1]:
            i -= 1
        if i == 0:
            return
        word[i] += 1
        prefix_max[i] = max(prefix_max[i - 1], word[i])
        for j in range(i + 1, n):
            word[j] = 0
            prefix_max[j] = prefix_max[i]
