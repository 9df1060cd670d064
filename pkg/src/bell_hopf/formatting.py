"""Deterministic text and JSON renderings shared by the CLI and the MCP tools."""

from __future__ import annotations

import json
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from .boson import NormalForm
from .polynomial import Coefficient
from .polynomial import YPolynomial
from .series import ExpSeries
from .statmech import CumulantSequence
from .statmech import MomentSequence


def coefficient_json(value: Coefficient | int) -> str | list[str]:
    """Rationals as "p/q" strings, YPolynomials as ascending coefficient lists."""
    if isinstance(value, YPolynomial):
        return [str(c) for c in value.coefficients] or ["0"]
    return str(Fraction(value))


def coefficient_text(value: Coefficient | int, var: str = "ybar") -> str:
    if isinstance(value, YPolynomial):
        return value.render(var)
    return str(Fraction(value))


def dumps(payload: Any) -> str:
    """JSON with insertion-ordered keys, so equal payloads give equal bytes."""
    return json.dumps(payload, ensure_ascii=False, separators=(", ", ": "))


def sequences_payload(moments: MomentSequence, cumulants: CumulantSequence) -> dict[str, Any]:
    return {
        "order": moments.order,
        "W": [coefficient_json(w) for w in moments.values],
        "V": [coefficient_json(v) for v in cumulants.values],
    }


def sequences_json(moments: MomentSequence, cumulants: CumulantSequence) -> str:
    """{"order": N, "W": [...], "V": [...]}."""
    return dumps(sequences_payload(moments, cumulants))


def _is_scalar(value: Coefficient) -> bool:
    return not isinstance(value, YPolynomial) or value.is_constant()


def sequence_list_text(values: Sequence[Coefficient]) -> str:
    return "[" + ", ".join(coefficient_text(v) for v in values) + "]"


def sequences_text(moments: MomentSequence, cumulants: CumulantSequence) -> str:
    """One line per sequence for rationals, one line per coefficient for polynomials."""
    flat = all(_is_scalar(v) for v in (*moments.values, *cumulants.values))
    if flat:
        return f"W = {sequence_list_text(moments.values)}\nV = {sequence_list_text(cumulants.values)}\n"
    lines = [f"W[{n}] = {coefficient_text(w)}" for n, w in enumerate(moments.values)]
    lines += [f"V[{n}] = {coefficient_text(v)}" for n, v in enumerate(cumulants.values, start=1)]
    return "\n".join(lines) + "\n"


def normal_form_json(nf: NormalForm) -> str:
    return dumps(nf.to_json_terms())


def series_payload(series: ExpSeries) -> dict[str, Any]:
    return {
        "order": series.order,
        "kind": series.kind,
        "coefficients": [coefficient_json(c) for c in series.coeffs],
    }
