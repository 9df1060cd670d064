"""Bell/Hopf MCP Tools: FastMCP portmanteau surface.

Related operations are grouped into one tool per domain; `operation` selects
the behavior.

TOOLS:
- bell_combinatorics: bell, stirling, bell_polynomial, set_partitions
- bell_boson: normal_order, nhat_power, coherent_expectation, egf_expectation, fock_oracle
- bell_diagrams: enumerate, census, multiplicity, code, dot
- bell_hopf: product, coproduct, counit, antipode, convolve, grade, check_axioms
- bell_statmech: pfi_free_boson, pfi_general, partition_function, divergence_report,
  moments_to_cumulants, cumulants_to_moments, graph_expansion
- bell_system: status, config, version
"""

from collections.abc import Awaitable
from collections.abc import Callable
from typing import Any
from typing import get_args

from ..mcp_tool_types import BellBosonOperation
from ..mcp_tool_types import BellCombinatoricsOperation
from ..mcp_tool_types import BellDiagramsOperation
from ..mcp_tool_types import BellHopfOperation
from ..mcp_tool_types import BellStatmechOperation
from ..mcp_tool_types import BellSystemOperation
from .boson_tools import bell_boson
from .combinatorics_tools import bell_combinatorics
from .diagram_tools import bell_diagrams
from .hopf_tools import bell_hopf
from .results import ToolResult
from .statmech_tools import bell_statmech
from .system import bell_system

__all__ = [
    "ToolResult",
    "bell_boson",
    "bell_combinatorics",
    "bell_diagrams",
    "bell_hopf",
    "bell_statmech",
    "bell_system",
]

# Tool metadata for discovery
PORTMANTEAU_TOOLS: list[dict[str, Any]] = [
    {
        "name": "bell_combinatorics",
        "function": bell_combinatorics,
        "category": "combinatorics",
        "operations": list(get_args(BellCombinatoricsOperation)),
    },
    {
        "name": "bell_boson",
        "function": bell_boson,
        "category": "normal_ordering",
        "operations": list(get_args(BellBosonOperation)),
    },
    {
        "name": "bell_diagrams",
        "function": bell_diagrams,
        "category": "diagrams",
        "operations": list(get_args(BellDiagramsOperation)),
    },
    {
        "name": "bell_hopf",
        "function": bell_hopf,
        "category": "hopf_algebra",
        "operations": list(get_args(BellHopfOperation)),
    },
    {
        "name": "bell_statmech",
        "function": bell_statmech,
        "category": "statistical_mechanics",
        "operations": list(get_args(BellStatmechOperation)),
    },
    {
        "name": "bell_system",
        "function": bell_system,
        "category": "system",
        "operations": list(get_args(BellSystemOperation)),
    },
]


def get_all_tools() -> list[Callable[..., Awaitable[dict[str, Any]]]]:
    """Return all portmanteau tool functions."""
    return [tool["function"] for tool in PORTMANTEAU_TOOLS]


def get_tool_metadata() -> list[dict[str, Any]]:
    """Return metadata for all portmanteau tools."""
    return PORTMANTEAU_TOOLS
