"""Boson normal-ordering portmanteau.

SUPPORTED OPERATIONS:
- normal_order: normal form of a word over a/c
- nhat_power: (a†a)ⁿ from the Stirling table
- coherent_expectation: ⟨z|word|z⟩, symbolic or at ybar / real z
- egf_expectation: truncated ⟨z|exp(x·word)|z⟩
- fock_oracle: truncated-Fock numeric ⟨z|wordⁿ|z⟩ with an error estimate
"""

from __future__ import annotations

from typing import Any

from ..boson import BosonWord
from ..boson import CoherentValue
from ..boson import coherent_expectation
from ..boson import egf_expectation
from ..boson import fock_oracle_expectation
from ..boson import normal_order
from ..boson import normal_order_nhat_power
from ..config import BellHopfConfig
from ..errors import DomainError
from ..formatting import series_payload
from ..mcp_tool_types import BellBosonOperation
from ..parsing import parse_rational
from .results import run_operation


def _coherent_data(value: CoherentValue, ybar: str, z: str) -> dict[str, Any]:
    data: dict[str, Any] = {
        "text": value.render(),
        "balanced": value.is_balanced,
        "terms": [{"r": r, "s": s, "coeff": str(c)} for (r, s), c in value.items],
    }
    if ybar:
        data["at_ybar"] = str(value.at_ybar(parse_rational(ybar)))
    if z:
        data["at_z"] = str(value.evaluate(parse_rational(z)))
    return data


async def bell_boson(
    operation: BellBosonOperation,
    *,
    word: str = "ca",
    n: int = 1,
    order: int | None = None,
    ybar: str = "",
    z: str = "",
    dim: int | None = None,
    config: BellHopfConfig | None = None,
) -> dict[str, Any]:
    """Normal ordering, coherent-state expectations and the Fock-space oracle."""
    cfg = config or BellHopfConfig()

    def handle() -> tuple[str, dict[str, Any]]:
        if operation == "normal_order":
            nf = normal_order(BosonWord.parse(word))
            return nf.render(), {"word": word, "text": nf.render(), "terms": nf.to_json_terms()}

        if operation == "nhat_power":
            if n < 0:
                raise DomainError(f"n must be non-negative, got {n}")
            nf = normal_order_nhat_power(n)
            return nf.render(), {"n": n, "text": nf.render(), "terms": nf.to_json_terms()}

        if operation == "coherent_expectation":
            value = coherent_expectation(normal_order(BosonWord.parse(word)))
            assert isinstance(value, CoherentValue)
            return value.render(), {"word": word, **_coherent_data(value, ybar, z)}

        if operation == "egf_expectation":
            series = egf_expectation(
                BosonWord.parse(word),
                cfg.truncation_order if order is None else order,
                parse_rational(z) if z else None,
            )
            return f"⟨z|exp(x·{word})|z⟩ to order {series.order}", {
                "word": word,
                **series_payload(series),
            }

        if operation == "fock_oracle":
            estimate = fock_oracle_expectation(
                BosonWord.parse(word),
                n,
                parse_rational(z or "1"),
                dim=cfg.fock_dimension if dim is None else dim,
                tolerance=cfg.fock_tolerance,
            )
            return f"⟨z|{word}^{n}|z⟩ ≈ {estimate.value!r}", {"word": word, "n": n, **estimate.model_dump()}

        raise DomainError(f"Unknown operation: {operation}")

    return run_operation("bell_boson", operation, handle, word=word, n=n, order=order)
