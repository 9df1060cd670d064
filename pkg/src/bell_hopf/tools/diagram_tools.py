"""Labeled-diagram portmanteau.

SUPPORTED OPERATIONS:
- enumerate: every labeled diagram on n lines with shape and code
- census: labeled count per shape of weight n (closed form)
- multiplicity: labeled count of one shape, closed form and (n ≤ 10) enumerated
- code: shape -> monomial, or monomial -> shape when `monomial` is given
- dot: DOT bundle of all diagrams on n lines
"""

from __future__ import annotations

from typing import Any

from ..config import BellHopfConfig
from ..diagrams import ENUMERATED_MULTIPLICITY_BOUND
from ..diagrams import DiagramShape
from ..diagrams import code_monomial
from ..diagrams import decode_monomial
from ..diagrams import enumerate_labeled_diagrams
from ..diagrams import format_census
from ..diagrams import shape_census
from ..diagrams import shape_multiplicity
from ..diagrams import shape_multiplicity_enumerated
from ..diagrams import shape_of
from ..diagrams import to_dot_bundle
from ..errors import BoundExceededError
from ..errors import DomainError
from ..hopf import AlphabetSpec
from ..hopf import parse_element
from ..mcp_tool_types import BellDiagramsOperation
from ..parsing import parse_rational_list
from .results import run_operation


def _parse_shape(text: str) -> DiagramShape:
    parts = parse_rational_list(text)
    if any(p.denominator != 1 for p in parts):
        raise DomainError(f"shape parts must be integers, got {text!r}")
    return DiagramShape.from_parts(int(p) for p in parts)


def _check_listing(n: int, bound: int) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > bound:
        raise BoundExceededError(f"full listing is limited to n <= {bound}; use census for n = {n}")


async def bell_diagrams(
    operation: BellDiagramsOperation,
    *,
    n: int = 3,
    shape: str = "",
    monomial: str = "",
    config: BellHopfConfig | None = None,
) -> dict[str, Any]:
    """Diagrams as set partitions, their shapes and monomial codes."""
    cfg = config or BellHopfConfig()

    def handle() -> tuple[str, dict[str, Any]]:
        if operation == "enumerate":
            _check_listing(n, cfg.max_listing_n)
            rows = []
            for d in enumerate_labeled_diagrams(n):
                s = shape_of(d)
                rows.append(
                    {"blocks": [list(b) for b in d.blocks], "shape": list(s.parts), "code": str(code_monomial(s))}
                )
            census = shape_census(n, method="enumerate")
            return f"{len(rows)} diagrams on {n} lines", {
                "n": n,
                "diagrams": rows,
                "census": format_census(census),
            }

        if operation == "census":
            if n < 0 or n > cfg.max_census_n:
                raise BoundExceededError(f"census needs 0 <= n <= {cfg.max_census_n}, got {n}")
            census = shape_census(n, method="closed")
            total = sum(c for _, c in census)
            return format_census(census), {
                "n": n,
                "census": [{"code": str(code_monomial(s)), "count": str(c)} for s, c in census],
                "total": str(total),
            }

        if operation == "multiplicity":
            s = _parse_shape(shape)
            closed = shape_multiplicity(s)
            data: dict[str, Any] = {"shape": list(s.parts), "closed_form": str(closed)}
            if s.weight <= ENUMERATED_MULTIPLICITY_BOUND:
                enumerated = shape_multiplicity_enumerated(s)
                data["enumerated"] = str(enumerated)
                data["agree"] = enumerated == closed
            return f"{s} occurs {closed} times", data

        if operation == "code":
            if monomial:
                m = parse_element(monomial, AlphabetSpec.BELL)
                if len(m.items) != 1 or m.items[0][1] != 1:
                    raise DomainError(f"{monomial!r} is not a single basis monomial")
                decoded = decode_monomial(m.items[0][0])
                return str(decoded), {"monomial": m.render(), "shape": list(decoded.parts)}
            s = _parse_shape(shape)
            code = code_monomial(s)
            return str(code), {
                "shape": list(s.parts),
                "monomial": str(code),
                "weight": code.weight,
                "letters": code.degree,
            }

        if operation == "dot":
            _check_listing(n, cfg.max_listing_n)
            return f"DOT for {n} lines", {"n": n, "dot": to_dot_bundle(enumerate_labeled_diagrams(n))}

        raise DomainError(f"Unknown operation: {operation}")

    return run_operation("bell_diagrams", operation, handle, n=n, shape=shape, monomial=monomial)
