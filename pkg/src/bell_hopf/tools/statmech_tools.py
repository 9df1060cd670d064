"""Partition-function portmanteau.

SUPPORTED OPERATIONS:
- pfi_free_boson: Bₙ(ybar) coefficients of exp(ybar(eˣ−1))
- pfi_general: W and V for an arbitrary model word
- partition_function: free-boson Z by closed form, Simpson quadrature or both
- divergence_report: term-wise divergence of the expanded y-integral
- moments_to_cumulants: V from W via the series logarithm
- cumulants_to_moments: W from V via the series exponential
- graph_expansion: Wₙ as a vertex-weighted diagram sum
"""

from __future__ import annotations

from typing import Any
from typing import Literal

import mpmath

from ..config import BellHopfConfig
from ..errors import ConvergenceError
from ..errors import DomainError
from ..formatting import coefficient_json
from ..formatting import sequences_payload
from ..formatting import series_payload
from ..mcp_tool_types import BellStatmechOperation
from ..parsing import parse_rational
from ..parsing import parse_rational_list
from ..parsing import parse_real
from ..statmech import CumulantSequence
from ..statmech import ModelSpec
from ..statmech import MomentSequence
from ..statmech import cumulants_to_moments
from ..statmech import graph_expansion
from ..statmech import moments_to_cumulants
from ..statmech import partition_function_closed
from ..statmech import partition_function_quadrature
from ..statmech import partition_function_radial
from ..statmech import pfi_free_boson
from ..statmech import pfi_general
from ..statmech import termwise_divergence_report
from .results import run_operation


def _partition_function(
    beta_eps: str, method: str, upper: float | None, steps: int | None, cfg: BellHopfConfig
) -> tuple[str, dict[str, Any]]:
    digits = cfg.decimal_precision
    model = ModelSpec.free_boson(parse_real(beta_eps, digits))
    data: dict[str, Any] = {"beta_eps": beta_eps, "method": method, "precision": digits}

    closed = None
    if method in ("closed", "both"):
        closed = partition_function_closed(model, digits)
        data["closed"] = mpmath.nstr(closed, digits, strip_zeros=False)
    if method == "closed":
        return f"Z = {data['closed']}", data

    if method == "radial":
        value = partition_function_radial(model, digits)
        data["radial"] = mpmath.nstr(value, digits, strip_zeros=False)
        return f"Z = {data['radial']}", data

    result = partition_function_quadrature(
        model,
        upper=cfg.quadrature_upper if upper is None else upper,
        steps=cfg.quadrature_steps if steps is None else steps,
        precision=digits,
    )
    data["quadrature"] = result.model_dump()
    if closed is None:
        return f"Z ≈ {result.value}", data

    with mpmath.workdps(digits):
        difference = abs(closed - result.as_mpf())
    data["difference"] = mpmath.nstr(difference, 3)
    if difference > result.error_bound + mpmath.mpf(10) ** (5 - digits):
        raise ConvergenceError(
            f"quadrature differs from the closed form by {data['difference']}, "
            f"above its bound {result.error_bound:.3e}"
        )
    return f"Z = {data['closed']} (quadrature within {result.error_bound:.1e})", data


async def bell_statmech(
    operation: BellStatmechOperation,
    *,
    word: str = "ca",
    order: int | None = None,
    z: str = "",
    beta_eps: str = "ln2",
    method: Literal["closed", "quadrature", "radial", "both", "enumerate"] = "closed",
    upper: float | None = None,
    steps: int | None = None,
    values: str = "",
    n: int = 0,
    config: BellHopfConfig | None = None,
) -> dict[str, Any]:
    """
    Partition-function integrand series, cumulants and the free-boson Z.

    `values` is a comma-separated rational list: W0,W1,... for
    moments_to_cumulants, V1,V2,... for cumulants_to_moments and
    graph_expansion.
    """
    cfg = config or BellHopfConfig()
    n_order = cfg.truncation_order if order is None else order

    def handle() -> tuple[str, dict[str, Any]]:
        if operation == "pfi_free_boson":
            series = pfi_free_boson(n_order)
            return f"exp(ybar(e^x - 1)) to order {n_order}", series_payload(series)

        if operation == "pfi_general":
            moments, cumulants = pfi_general(word, n_order, parse_rational(z) if z else None)
            return f"W and V of {word or 'e'} to order {n_order}", {
                "word": word,
                **sequences_payload(moments, cumulants),
            }

        if operation == "partition_function":
            if method not in ("closed", "quadrature", "radial", "both"):
                raise DomainError(f"unknown partition-function method {method!r}")
            return _partition_function(beta_eps, method, upper, steps, cfg)

        if operation == "divergence_report":
            report = termwise_divergence_report(n_order)
            return report.conclusion, report.model_dump()

        if operation == "moments_to_cumulants":
            moments = MomentSequence.from_values(parse_rational_list(values))
            cumulants = moments_to_cumulants(moments)
            return f"{cumulants.order} cumulants", sequences_payload(moments, cumulants)

        if operation == "cumulants_to_moments":
            cumulants = CumulantSequence.from_values(parse_rational_list(values))
            moments = cumulants_to_moments(cumulants)
            return f"{moments.order} moments", sequences_payload(moments, cumulants)

        if operation == "graph_expansion":
            cumulants = CumulantSequence.from_values(parse_rational_list(values))
            if method == "both":
                closed = graph_expansion(cumulants, n, "closed")
                enumerated = graph_expansion(cumulants, n, "enumerate")
                if closed != enumerated:
                    raise DomainError(f"closed form {closed} and enumeration {enumerated} disagree")
                value = closed
            elif method in ("closed", "enumerate"):
                value = graph_expansion(cumulants, n, method)
            else:
                raise DomainError(f"unknown expansion method {method!r}")
            series_value = cumulants_to_moments(cumulants)[n]
            return f"W[{n}] = {value}", {
                "n": n,
                "value": coefficient_json(value),
                "series_value": coefficient_json(series_value),
                "agree": value == series_value,
            }

        raise DomainError(f"Unknown operation: {operation}")

    return run_operation("bell_statmech", operation, handle, word=word, order=n_order, method=method)
