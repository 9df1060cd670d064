"""
loguru setup for bell-hopf.

Library modules log to stderr only (plus an optional rotating file), so the
CLI's stdout stays byte-for-byte reproducible. Components get a logger bound
to their name; MCP operations are timed through an OperationContext.
"""

import sys
import time
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any

from loguru import logger

_STDERR_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <7}</level> | "
    "<cyan>{extra[component]}</cyan> | <level>{message}</level>"
)
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level} | {extra[component]}:{function}:{line} | {message}"

logger.configure(extra={"component": "bell_hopf"})


class StructuredLogger:
    """Owns the loguru sinks; reinstalled whenever the level or file changes."""

    def __init__(self, log_level: str = "WARNING", log_file: Path | None = None):
        self.log_level = log_level.upper()
        self.log_file = log_file
        self._sink_ids: list[int] = []
        self._install()

    def _install(self) -> None:
        logger.remove()
        self._sink_ids = [
            logger.add(
                sys.stderr,
                level=self.log_level,
                format=_STDERR_FORMAT,
                colorize=None,
                backtrace=self.log_level == "DEBUG",
                diagnose=False,
            )
        ]
        if self.log_file:
            self._sink_ids.append(
                logger.add(
                    str(self.log_file),
                    level=self.log_level,
                    format=_FILE_FORMAT,
                    rotation="10 MB",
                    retention="7 days",
                    compression="gz",
                )
            )

    def get_logger(self, name: str) -> Any:
        return logger.bind(component=name)


_logger_instance: StructuredLogger | None = None


def setup_logging(
    log_level: str = "WARNING",
    log_file: Path | None = None,
    component: str = "bell_hopf",
    force: bool = False,
) -> Any:
    """
    Install the sinks once (or again with force=True) and return a logger
    bound to `component`.
    """
    global _logger_instance

    if _logger_instance is None or force:
        _logger_instance = StructuredLogger(log_level, log_file)
    return _logger_instance.get_logger(component)


def get_logger(component: str = "bell_hopf") -> Any:
    """Bound logger for a module; sinks are installed lazily at WARNING."""
    if _logger_instance is None:
        return setup_logging(component=component)
    return _logger_instance.get_logger(component)


@dataclass
class OperationContext:
    """One timed tool operation."""

    operation: str
    parameters: dict[str, Any] = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000


_operations = logger.bind(component="operations")


def log_operation_start(operation: str, **parameters: Any) -> OperationContext:
    context = OperationContext(operation, {k: v for k, v in parameters.items() if v is not None})
    _operations.debug(f"{operation} started {context.parameters}")
    return context


def log_operation_success(context: OperationContext) -> float:
    """Log completion; returns the elapsed milliseconds."""
    elapsed = context.elapsed_ms
    _operations.debug(f"{context.operation} done in {elapsed:.2f} ms")
    return elapsed


def log_operation_error(context: OperationContext, error: Exception) -> float:
    """Log a failed operation at WARNING; returns the elapsed milliseconds."""
    elapsed = context.elapsed_ms
    _operations.warning(
        f"{context.operation} failed after {elapsed:.2f} ms: {type(error).__name__}: {error}"
    )
    return elapsed
