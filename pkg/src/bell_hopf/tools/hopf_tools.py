"""POLY/BELL Hopf-algebra portmanteau.

SUPPORTED OPERATIONS:
- product: element · other
- coproduct: Δ(element)
- counit: ε(element)
- antipode: S(element)
- convolve: m(S⊗id)Δ and m(id⊗S)Δ
- grade: homogeneous weight components
- check_axioms: the Hopf axiom report up to a weight bound

Elements use the text syntax `3/2*y1^2*y3 + y2 - e`.
"""

from __future__ import annotations

from typing import Any
from typing import Literal

from ..config import BellHopfConfig
from ..errors import DomainError
from ..hopf import AlphabetSpec
from ..hopf import antipode
from ..hopf import check_hopf_axioms
from ..hopf import convolve_antipode_id
from ..hopf import convolve_id_antipode
from ..hopf import coproduct
from ..hopf import counit
from ..hopf import grade_components
from ..hopf import parse_element
from ..hopf import product
from ..mcp_tool_types import BellHopfOperation
from .results import run_operation


async def bell_hopf(
    operation: BellHopfOperation,
    *,
    element: str = "e",
    other: str = "e",
    alphabet: Literal["poly", "bell"] = "bell",
    weight_bound: int | None = None,
    samples: int | None = None,
    seed: int | None = None,
    config: BellHopfConfig | None = None,
) -> dict[str, Any]:
    """Structure maps and axiom checks of the POLY and BELL Hopf algebras."""
    cfg = config or BellHopfConfig()
    spec = AlphabetSpec(alphabet)

    def handle() -> tuple[str, dict[str, Any]]:
        if operation == "check_axioms":
            report = check_hopf_axioms(
                cfg.hopf_weight_bound if weight_bound is None else weight_bound,
                spec,
                samples=cfg.hopf_random_samples if samples is None else samples,
                seed=cfg.random_seed if seed is None else seed,
                max_workers=cfg.max_workers,
            )
            verdict = "all axioms hold" if report.passed else "axiom failure"
            return f"{spec.value.upper()}: {verdict}", report.model_dump()

        a = parse_element(element, spec)

        if operation == "product":
            b = parse_element(other, spec)
            result = product(a, b)
            return result.render(), {"element": a.render(), "other": b.render(), "result": result.render()}

        if operation == "coproduct":
            delta = coproduct(a)
            return delta.render(), {"element": a.render(), "result": delta.render(), "terms": len(delta.items)}

        if operation == "counit":
            value = counit(a)
            return str(value), {"element": a.render(), "result": str(value)}

        if operation == "antipode":
            result = antipode(a)
            return result.render(), {"element": a.render(), "result": result.render()}

        if operation == "convolve":
            left = convolve_antipode_id(a)
            right = convolve_id_antipode(a)
            return left.render(), {
                "element": a.render(),
                "antipode_id": left.render(),
                "id_antipode": right.render(),
                "counit": str(counit(a)),
            }

        if operation == "grade":
            parts = grade_components(a)
            return f"{len(parts)} weight components", {
                "element": a.render(),
                "components": {str(w): c.render() for w, c in parts.items()},
            }

        raise DomainError(f"Unknown operation: {operation}")

    return run_operation("bell_hopf", operation, handle, element=element, alphabet=alphabet)
