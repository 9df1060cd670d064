"""Result envelope shared by the portmanteau tools."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from pydantic import BaseModel
from pydantic import Field

from ..errors import BellHopfError
from ..logging_config import get_logger
from ..logging_config import log_operation_error
from ..logging_config import log_operation_start
from ..logging_config import log_operation_success

logger = get_logger("tools")


class ToolResult(BaseModel):
    success: bool
    operation: str
    message: str
    data: dict[str, Any] = Field(default_factory=dict)
    execution_time_ms: float = 0.0
    error: str = ""


def run_operation(
    tool: str, operation: str, handler: Callable[[], tuple[str, dict[str, Any]]], **params: Any
) -> dict[str, Any]:
    """
    Run one dispatched operation and wrap it in a ToolResult dump.

    Library errors come back as success=false with the exception class in
    `error`; anything unexpected is logged with its traceback as well.
    """
    context = log_operation_start(f"{tool}.{operation}", **params)
    try:
        message, data = handler()
    except BellHopfError as e:
        return ToolResult(
            success=False,
            operation=operation,
            message=str(e),
            execution_time_ms=log_operation_error(context, e),
            error=type(e).__name__,
        ).model_dump()
    except Exception as e:
        logger.exception(f"{tool}.{operation} failed unexpectedly")
        return ToolResult(
            success=False,
            operation=operation,
            message=f"Unexpected error: {e}",
            execution_time_ms=log_operation_error(context, e),
            error=type(e).__name__,
        ).model_dump()

    return ToolResult(
        success=True,
        operation=operation,
        message=message,
        data=data,
        execution_time_ms=log_operation_success(context),
    ).model_dump()
