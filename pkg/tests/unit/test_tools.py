"""
Tests for the portmanteau tool layer and server registration.
"""

import inspect
from collections.abc import Awaitable
from collections.abc import Callable
from typing import Any
from typing import get_type_hints

import pytest

from bell_hopf import main as server_module
from bell_hopf import tools as tools_package
from bell_hopf.config import BellHopfConfig
from bell_hopf.main import BellHopfMcpServer
from bell_hopf.tools import PORTMANTEAU_TOOLS
from bell_hopf.tools import bell_boson
from bell_hopf.tools import bell_combinatorics
from bell_hopf.tools import bell_diagrams
from bell_hopf.tools import bell_hopf
from bell_hopf.tools import bell_statmech
from bell_hopf.tools import bell_system
from bell_hopf.tools import get_all_tools
from bell_hopf.tools import get_tool_metadata


@pytest.fixture
def config():
    return BellHopfConfig(hopf_weight_bound=3, hopf_random_samples=8, quadrature_steps=2000)


def assert_envelope(result):
    assert set(result) == {"success", "operation", "message", "data", "execution_time_ms", "error"}
    assert result["execution_time_ms"] >= 0


class TestCombinatoricsTool:
    async def test_bell_table(self, config):
        result = await bell_combinatorics("bell", n=10, config=config)
        assert_envelope(result)
        assert result["success"] is True
        assert result["data"]["table"][6] == "203"
        assert result["data"]["value"] == "115975"

    async def test_stirling_value_and_row(self, config):
        value = await bell_combinatorics("stirling", n=10, k=5, config=config)
        assert value["data"]["value"] == "42525"
        row = await bell_combinatorics("stirling", n=4, config=config)
        assert row["data"]["row"] == ["0", "1", "7", "6", "1"]

    async def test_domain_error_is_reported(self, config):
        result = await bell_combinatorics("stirling", n=3, k=5, config=config)
        assert result["success"] is False
        assert result["error"] == "DomainError"

    async def test_set_partitions(self, config):
        result = await bell_combinatorics("set_partitions", n=4, config=config)
        assert result["data"]["count"] == 15
        assert result["data"]["by_blocks"] == {"1": 1, "2": 7, "3": 6, "4": 1}
        assert result["data"]["partitions"][0] == [[1, 2, 3, 4]]

    async def test_enumeration_bound(self, config):
        result = await bell_combinatorics("set_partitions", n=13, config=config)
        assert result["error"] == "BoundExceededError"

    async def test_bell_polynomial(self, config):
        result = await bell_combinatorics("bell_polynomial", n=3, config=config)
        assert result["message"] == "B3(y) = y + 3 y^2 + y^3"


class TestBosonTool:
    async def test_normal_order(self, config):
        result = await bell_boson("normal_order", word="ac", config=config)
        assert result["message"] == "c a + 1"
        assert result["data"]["terms"][1] == {"r": 0, "s": 0, "coeff": "1"}

    async def test_parse_error(self, config):
        result = await bell_boson("normal_order", word="cx", config=config)
        assert result["success"] is False
        assert result["error"] == "WordParseError"
        assert "position 2" in result["message"]

    async def test_nhat_power(self, config):
        result = await bell_boson("nhat_power", n=2, config=config)
        assert result["message"] == "c^2 a^2 + c a"

    async def test_coherent_expectation(self, config):
        result = await bell_boson("coherent_expectation", word="caca", ybar="2", config=config)
        assert result["message"] == "ybar + ybar^2"
        assert result["data"]["at_ybar"] == "6"

    async def test_egf_requires_z_for_unbalanced(self, config):
        failed = await bell_boson("egf_expectation", word="a", order=3, config=config)
        assert failed["error"] == "DomainError"
        ok = await bell_boson("egf_expectation", word="a", order=3, z="2", config=config)
        assert ok["data"]["coefficients"] == ["1", "2", "4", "8"]

    async def test_fock_oracle(self, config):
        result = await bell_boson("fock_oracle", word="ca", n=3, z="1", dim=40, config=config)
        assert result["success"] is True
        assert abs(result["data"]["value"] - 5) < 1e-8


class TestDiagramsTool:
    async def test_census(self, config):
        result = await bell_diagrams("census", n=3, config=config)
        assert result["message"] == "y1^3:1, y1*y2:3, y3:1"
        assert result["data"]["total"] == "5"

    async def test_enumerate(self, config):
        result = await bell_diagrams("enumerate", n=3, config=config)
        assert len(result["data"]["diagrams"]) == 5
        assert result["data"]["diagrams"][1] == {"blocks": [[1, 2], [3]], "shape": [2, 1], "code": "y1*y2"}

    async def test_listing_bound(self, config):
        result = await bell_diagrams("enumerate", n=config.max_listing_n + 1, config=config)
        assert result["error"] == "BoundExceededError"

    async def test_multiplicity(self, config):
        result = await bell_diagrams("multiplicity", shape="2,2,1", config=config)
        assert result["data"]["closed_form"] == "15"
        assert result["data"]["agree"] is True

    async def test_code_both_directions(self, config):
        forward = await bell_diagrams("code", shape="3,1,1", config=config)
        assert forward["message"] == "y1^2*y3"
        backward = await bell_diagrams("code", monomial="y1^2*y3", config=config)
        assert backward["data"]["shape"] == [3, 1, 1]

    async def test_dot(self, config):
        result = await bell_diagrams("dot", n=2, config=config)
        assert result["data"]["dot"].startswith("graph d1 {")


class TestHopfTool:
    async def test_coproduct(self, config):
        result = await bell_hopf("coproduct", element="y2", config=config)
        assert result["message"] == "e (x) y2 + y2 (x) e"

    async def test_product_and_antipode(self, config):
        product = await bell_hopf("product", element="y1 + e", other="y1 - e", config=config)
        assert product["message"] == "-e + y1^2"
        antipode = await bell_hopf("antipode", element="y1*y2 + y3", config=config)
        assert antipode["message"] == "y1*y2 - y3"

    async def test_convolve(self, config):
        result = await bell_hopf("convolve", element="3 + y1^2", config=config)
        assert result["data"]["antipode_id"] == "3"
        assert result["data"]["id_antipode"] == "3"

    async def test_poly_rejects_y2(self, config):
        result = await bell_hopf("counit", element="y2", alphabet="poly", config=config)
        assert result["error"] == "DomainError"

    async def test_element_parse_error(self, config):
        result = await bell_hopf("counit", element="y1 +", config=config)
        assert result["error"] == "ElementParseError"

    async def test_check_axioms_uses_config_defaults(self, config):
        result = await bell_hopf("check_axioms", config=config)
        assert result["success"] is True
        assert result["data"]["passed"] is True
        assert result["data"]["weight_bound"] == 3
        assert result["data"]["random_samples"] == 8


class TestStatmechTool:
    async def test_pfi_general(self, config):
        result = await bell_statmech("pfi_general", word="ca", order=2, config=config)
        assert result["data"]["W"] == [["1"], ["0", "1"], ["0", "1", "1"]]

    async def test_partition_function_both(self, config):
        result = await bell_statmech("partition_function", beta_eps="ln2", method="both", config=config)
        assert result["success"] is True
        assert result["data"]["closed"].startswith("2.000000000")
        assert result["data"]["quadrature"]["value"].startswith("2.0000000")

    async def test_partition_function_negative(self, config):
        result = await bell_statmech("partition_function", beta_eps="-1", config=config)
        assert result["error"] == "DomainError"

    async def test_conversions(self, config):
        cumulants = await bell_statmech("moments_to_cumulants", values="1,1,2,5,15", config=config)
        assert cumulants["data"]["V"] == ["1", "1", "1", "1"]
        moments = await bell_statmech("cumulants_to_moments", values="1,1,1", config=config)
        assert moments["data"]["W"] == ["1", "1", "2", "5"]

    async def test_graph_expansion(self, config):
        result = await bell_statmech("graph_expansion", values="1,2,3", n=3, method="both", config=config)
        assert result["data"]["value"] == "10"
        assert result["data"]["agree"] is True

    async def test_divergence_report(self, config):
        result = await bell_statmech("divergence_report", order=3, config=config)
        assert result["data"]["all_divergent"] is True


class TestSystemTool:
    async def test_status(self, config):
        result = await bell_system("status", config=config)
        assert set(result["data"]["tools"]) == {tool["name"] for tool in PORTMANTEAU_TOOLS}

    async def test_config(self, config):
        result = await bell_system("config", config=config)
        assert result["data"]["hopf_weight_bound"] == 3

    async def test_version(self, config):
        result = await bell_system("version", config=config)
        assert result["data"]["version"] == result["message"].split()[-1]


class TestServer:
    async def test_registers_all_portmanteau_tools(self, config):
        server = BellHopfMcpServer(config=config)
        assert await server.initialize() is True
        tools = await server.mcp.list_tools()
        assert {t.name for t in tools} == {tool["name"] for tool in PORTMANTEAU_TOOLS}


class TestDiscovery:
    def test_discovery_helpers_are_typed(self):
        assert get_type_hints(get_all_tools)["return"] == list[Callable[..., Awaitable[dict[str, Any]]]]
        assert get_type_hints(get_tool_metadata)["return"] == list[dict[str, Any]]

    async def test_all_tools_are_coroutine_functions(self, config):
        tools = get_all_tools()
        assert [t.__name__ for t in tools] == [m["name"] for m in get_tool_metadata()]
        assert all(inspect.iscoroutinefunction(t) for t in tools)
        result = await tools[-1]("version", config=config)
        assert_envelope(result)

    def test_module_summaries_use_plain_punctuation(self):
        for module in (server_module, tools_package):
            summary = module.__doc__.strip().splitlines()[0]
            assert summary.startswith("Bell/Hopf MCP ")
            assert "—" not in module.__doc__
