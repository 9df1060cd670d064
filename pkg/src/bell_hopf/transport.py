"""
Transport selection for the Bell/Hopf MCP server.

stdio is the default; HTTP (streamable) is chosen with --http or
MCP_TRANSPORT=http. Host, port and path come from --host/--port/--path,
then MCP_HOST/MCP_PORT/MCP_PATH, then the defaults below.
"""

import argparse
import asyncio
import os
from collections.abc import Mapping
from typing import Any
from typing import Literal

from pydantic import BaseModel
from pydantic import Field

from .logging_config import get_logger

logger = get_logger("transport")

TransportType = Literal["stdio", "http"]

ENV_TRANSPORT = "MCP_TRANSPORT"
ENV_HOST = "MCP_HOST"
ENV_PORT = "MCP_PORT"
ENV_PATH = "MCP_PATH"

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 10874
DEFAULT_PATH = "/mcp"


class TransportSettings(BaseModel):
    transport: str = "stdio"
    host: str = DEFAULT_HOST
    port: int = Field(default=DEFAULT_PORT, ge=1, le=65535)
    path: str = DEFAULT_PATH

    @classmethod
    def from_environment(cls, environ: Mapping[str, str] | None = None) -> "TransportSettings":
        env = os.environ if environ is None else environ
        return cls(
            transport=env.get(ENV_TRANSPORT, "stdio").strip().lower(),
            host=env.get(ENV_HOST, DEFAULT_HOST),
            port=int(env.get(ENV_PORT, DEFAULT_PORT)),
            path=env.get(ENV_PATH, DEFAULT_PATH),
        )

    @property
    def endpoint(self) -> str:
        return f"http://{self.host}:{self.port}{self.path}"


def get_transport_config(environ: Mapping[str, str] | None = None) -> dict[str, Any]:
    """Environment-only settings as a plain dict."""
    return TransportSettings.from_environment(environ).model_dump()


def create_argument_parser(server_name: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description=f"{server_name} (FastMCP)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "Environment fallbacks:\n"
            f"  {ENV_TRANSPORT}  stdio | http (default stdio)\n"
            f"  {ENV_HOST}       bind address (default {DEFAULT_HOST})\n"
            f"  {ENV_PORT}       port (default {DEFAULT_PORT})\n"
            f"  {ENV_PATH}       HTTP endpoint path (default {DEFAULT_PATH})\n"
        ),
    )
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--stdio", action="store_true", help="JSON-RPC over stdio (default)")
    mode.add_argument("--http", action="store_true", help="streamable HTTP")
    parser.add_argument("--host", default=None, help=f"bind address (${ENV_HOST})")
    parser.add_argument("--port", type=int, default=None, help=f"port (${ENV_PORT})")
    parser.add_argument("--path", default=None, help=f"HTTP endpoint path (${ENV_PATH})")
    parser.add_argument("--debug", action="store_true", help="debug logging")
    return parser


def resolve_transport(
    args: argparse.Namespace, environ: Mapping[str, str] | None = None
) -> TransportType:
    """--http / --stdio, else MCP_TRANSPORT; anything unrecognized falls back to stdio."""
    if getattr(args, "http", False):
        return "http"
    if getattr(args, "stdio", False):
        return "stdio"
    requested = TransportSettings.from_environment(environ).transport
    if requested == "http":
        return "http"
    if requested != "stdio":
        logger.warning(f"Unknown {ENV_TRANSPORT}={requested!r}; using stdio")
    return "stdio"


def resolve_settings(
    args: argparse.Namespace, environ: Mapping[str, str] | None = None
) -> TransportSettings:
    env = TransportSettings.from_environment(environ)
    overrides = {
        key: getattr(args, key, None)
        for key in ("host", "port", "path")
        if getattr(args, key, None) is not None
    }
    return env.model_copy(update={"transport": resolve_transport(args, environ), **overrides})


def resolve_config(
    args: argparse.Namespace, environ: Mapping[str, str] | None = None
) -> dict[str, Any]:
    """CLI flags over environment, field by field."""
    return resolve_settings(args, environ).model_dump()


async def run_server_async(
    mcp_app: Any, args: argparse.Namespace | None = None, server_name: str = "bell-hopf-mcp"
) -> None:
    """Serve `mcp_app` until the transport closes or the task is cancelled."""
    if args is None:
        args = create_argument_parser(server_name).parse_args()

    settings = resolve_settings(args)
    try:
        if settings.transport == "stdio":
            logger.info(f"{server_name} on stdio")
            await mcp_app.run_stdio_async()
        else:
            logger.info(f"{server_name} on {settings.endpoint}")
            await mcp_app.run_http_async(host=settings.host, port=settings.port, path=settings.path)
    except asyncio.CancelledError:
        logger.info(f"{server_name} cancelled")
    except Exception as e:
        logger.error(f"{server_name} stopped with {type(e).__name__}: {e}")
        raise


__all__ = [
    "ENV_HOST",
    "ENV_PATH",
    "ENV_PORT",
    "ENV_TRANSPORT",
    "TransportSettings",
    "TransportType",
    "create_argument_parser",
    "get_transport_config",
    "resolve_config",
    "resolve_settings",
    "resolve_transport",
    "run_server_async",
]
