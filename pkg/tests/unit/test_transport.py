"""
Unit tests for transport resolution.
"""

import argparse

import pytest
from pydantic import ValidationError

from bell_hopf.transport import ENV_PORT
from bell_hopf.transport import ENV_TRANSPORT
from bell_hopf.transport import TransportSettings
from bell_hopf.transport import create_argument_parser
from bell_hopf.transport import get_transport_config
from bell_hopf.transport import resolve_config
from bell_hopf.transport import resolve_settings
from bell_hopf.transport import resolve_transport


def _args(**overrides):
    values = {"stdio": False, "http": False, "host": None, "port": None, "path": None, "debug": False}
    values.update(overrides)
    return argparse.Namespace(**values)


class TestTransport:
    def test_defaults(self):
        config = get_transport_config({})
        assert config == {"transport": "stdio", "host": "127.0.0.1", "port": 10874, "path": "/mcp"}

    def test_cli_flag_wins_over_environment(self):
        assert resolve_transport(_args(http=True), {ENV_TRANSPORT: "stdio"}) == "http"
        assert resolve_transport(_args(stdio=True), {ENV_TRANSPORT: "http"}) == "stdio"

    def test_environment_fallback(self):
        assert resolve_transport(_args(), {ENV_TRANSPORT: "HTTP"}) == "http"
        assert resolve_transport(_args(), {ENV_TRANSPORT: "carrier-pigeon"}) == "stdio"

    def test_resolve_config_merges_fields(self):
        config = resolve_config(_args(port=9000), {ENV_PORT: "8000", ENV_TRANSPORT: "http"})
        assert config["port"] == 9000
        assert config["transport"] == "http"
        assert config["path"] == "/mcp"

    def test_parser(self):
        args = create_argument_parser("bell-hopf-mcp").parse_args(["--http", "--port", "9100"])
        assert args.http is True
        assert args.port == 9100

    def test_settings_endpoint(self):
        args = _args(http=True, host="0.0.0.0", path="/bell")
        settings = resolve_settings(args, {})
        assert settings.endpoint == "http://0.0.0.0:10874/bell"

    def test_port_out_of_range(self):
        with pytest.raises(ValidationError):
            TransportSettings.from_environment({ENV_PORT: "70000"})
