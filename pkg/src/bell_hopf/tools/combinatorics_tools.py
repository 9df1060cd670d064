"""Bell/Stirling combinatorics portmanteau.

SUPPORTED OPERATIONS:
- bell: B(0..n) table
- stirling: S(n,k), or the row S(n,0..n) when k is omitted
- bell_polynomial: coefficients of Bₙ(y)
- set_partitions: set partitions of {1..n} with per-block-count tallies
"""

from __future__ import annotations

from collections import Counter
from typing import Any

from ..combinatorics import bell
from ..combinatorics import bell_polynomial
from ..combinatorics import enumerate_set_partitions
from ..combinatorics import stirling2
from ..combinatorics import stirling_row
from ..config import BellHopfConfig
from ..errors import BoundExceededError
from ..errors import DomainError
from ..mcp_tool_types import BellCombinatoricsOperation
from .results import run_operation


def _check_n(n: int, bound: int, what: str) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > bound:
        raise BoundExceededError(f"{what} is limited to n <= {bound}, got {n}")


async def bell_combinatorics(
    operation: BellCombinatoricsOperation,
    *,
    n: int = 0,
    k: int | None = None,
    config: BellHopfConfig | None = None,
) -> dict[str, Any]:
    """Stirling numbers, Bell numbers, Bell polynomials and set partitions."""
    cfg = config or BellHopfConfig()

    def handle() -> tuple[str, dict[str, Any]]:
        if operation == "bell":
            _check_n(n, cfg.max_bell_n, "the Bell table")
            table = [str(bell(i)) for i in range(n + 1)]
            return f"B({n}) = {table[-1]}", {"n": n, "value": table[-1], "table": table}

        if operation == "stirling":
            _check_n(n, cfg.max_bell_n, "the Stirling table")
            if k is not None:
                value = stirling2(n, k)
                return f"S({n},{k}) = {value}", {"n": n, "k": k, "value": str(value)}
            row = [str(v) for v in stirling_row(n)]
            return f"S({n},0..{n})", {"n": n, "row": row}

        if operation == "bell_polynomial":
            _check_n(n, cfg.max_bell_n, "Bell polynomials")
            poly = bell_polynomial(n)
            return f"B{n}(y) = {poly.render('y')}", {
                "n": n,
                "text": poly.render("y"),
                "coefficients": [str(c) for c in poly.coefficients],
            }

        if operation == "set_partitions":
            _check_n(n, cfg.max_enumeration_n, "set-partition enumeration")
            by_blocks: Counter[int] = Counter()
            listing: list[list[list[int]]] = []
            for partition in enumerate_set_partitions(n):
                by_blocks[partition.num_blocks] += 1
                if n <= cfg.max_listing_n:
                    listing.append([list(b) for b in partition.blocks])
            count = sum(by_blocks.values())
            data: dict[str, Any] = {
                "n": n,
                "count": count,
                "by_blocks": {str(j): c for j, c in sorted(by_blocks.items())},
                "listed": n <= cfg.max_listing_n,
            }
            if data["listed"]:
                data["partitions"] = listing
            return f"{count} set partitions of {{1..{n}}}", data

        raise DomainError(f"Unknown operation: {operation}")

    return run_operation("bell_combinatorics", operation, handle, n=n, k=k)
