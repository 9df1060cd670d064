"""System operations for the Bell/Hopf MCP server.

SUPPORTED OPERATIONS:
- status: server, tool and cache status
- config: the effective configuration
- version: package and dependency versions
"""

from __future__ import annotations

import platform
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as package_version
from typing import Any

from .. import __version__
from ..boson import normal_order_cache_info
from ..config import BellHopfConfig
from ..errors import DomainError
from ..mcp_tool_types import BellSystemOperation
from .results import run_operation

_DEPENDENCIES = ("fastmcp", "pydantic", "mpmath", "sympy", "numpy", "click", "loguru")


def _dependency_versions() -> dict[str, str]:
    found = {}
    for name in _DEPENDENCIES:
        try:
            found[name] = package_version(name)
        except PackageNotFoundError:
            found[name] = "not installed"
    return found


async def bell_system(
    operation: BellSystemOperation,
    *,
    config: BellHopfConfig | None = None,
) -> dict[str, Any]:
    """Status, configuration and version of the server."""
    cfg = config or BellHopfConfig()

    def handle() -> tuple[str, dict[str, Any]]:
        if operation == "status":
            from . import PORTMANTEAU_TOOLS

            return "Bell/Hopf MCP Server is running", {
                "server": {"name": "Bell/Hopf MCP Server", "version": __version__, "status": "running"},
                "tools": {tool["name"]: tool["operations"] for tool in PORTMANTEAU_TOOLS},
                "normal_order_cache": normal_order_cache_info(),
            }

        if operation == "config":
            return "Current configuration", cfg.model_dump()

        if operation == "version":
            return f"bell-hopf {__version__}", {
                "version": __version__,
                "python": platform.python_version(),
                "dependencies": _dependency_versions(),
            }

        raise DomainError(f"Unknown operation: {operation}")

    return run_operation("bell_system", operation, handle)
