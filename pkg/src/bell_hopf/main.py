"""
Bell/Hopf MCP Server: FastMCP portmanteau entry point.

Exposes the combinatorics, normal-ordering, diagram, Hopf-algebra and
partition-function layers as six read-only portmanteau tools.
"""

import argparse
import asyncio
import os
import sys
from pathlib import Path
from typing import Any
from typing import Literal

from fastmcp import FastMCP
from mcp.types import ToolAnnotations

from . import __version__
from .config import BellHopfConfig
from .config import load_config
from .logging_config import setup_logging
from .mcp_tool_types import BellBosonOperation
from .mcp_tool_types import BellCombinatoricsOperation
from .mcp_tool_types import BellDiagramsOperation
from .mcp_tool_types import BellHopfOperation
from .mcp_tool_types import BellStatmechOperation
from .mcp_tool_types import BellSystemOperation
from .tools import PORTMANTEAU_TOOLS
from .tools import bell_boson as bell_boson_tool
from .tools import bell_combinatorics as bell_combinatorics_tool
from .tools import bell_diagrams as bell_diagrams_tool
from .tools import bell_hopf as bell_hopf_tool
from .tools import bell_statmech as bell_statmech_tool
from .tools import bell_system as bell_system_tool
from .transport import run_server_async

SERVER_NAME = "Bell/Hopf MCP Server"

logger = setup_logging(component="main")

_READ_ONLY = ToolAnnotations(
    readOnlyHint=True,
    destructiveHint=False,
    idempotentHint=True,
    openWorldHint=False,
)


class BellHopfMcpServer:
    """Main server class for the Bell/Hopf MCP tools."""

    def __init__(self, config_path: Path | None = None, config: BellHopfConfig | None = None):
        """Initialize the server.

        Args:
            config_path: Optional path to a YAML configuration file
            config: Explicit configuration, overrides config_path
        """
        if config is not None:
            self.config = config
        else:
            self.config = load_config(config_path)
        self.mcp = FastMCP(SERVER_NAME)
        self.app = self.mcp

    async def initialize(self) -> bool:
        """Register tools; False if anything fails."""
        try:
            logger.info(f"Initializing {SERVER_NAME} {__version__}")
            self._register_portmanteau_tools()
            logger.info(f"Registered {len(PORTMANTEAU_TOOLS)} portmanteau tools")
            return True
        except Exception as e:
            logger.error(f"Critical error during initialization: {e}")
            return False

    def _register_portmanteau_tools(self) -> None:
        """Register all portmanteau tools with FastMCP."""

        @self.mcp.tool(annotations=_READ_ONLY)
        async def bell_combinatorics(
            operation: BellCombinatoricsOperation,
            n: int = 0,
            k: int | None = None,
        ) -> dict[str, Any]:
            """BELL_COMBINATORICS: Stirling numbers of the second kind, Bell numbers and polynomials.

            Operations:
            - bell: B(0..n); B(n) counts set partitions of an n-set.
            - stirling: S(n, k), or the whole row when k is omitted.
            - bell_polynomial: coefficients of Bₙ(y) = Σₖ S(n,k) yᵏ.
            - set_partitions: enumerate partitions of {1..n} (n ≤ 12), tallied by block count.

            Args:
                operation: Must be one of the Literal values.
                n: Size of the underlying set.
                k: Block count for stirling.

            Returns:
                Dict with success, operation, message, data, execution_time_ms and error.
                Big integers are returned as decimal strings.
            """
            return await bell_combinatorics_tool(operation=operation, n=n, k=k, config=self.config)

        @self.mcp.tool(annotations=_READ_ONLY)
        async def bell_boson(
            operation: BellBosonOperation,
            word: str = "ca",
            n: int = 1,
            order: int | None = None,
            ybar: str = "",
            z: str = "",
            dim: int | None = None,
        ) -> dict[str, Any]:
            """BELL_BOSON: Normal ordering of boson words and coherent-state expectations.

            Words are strings over `a` (annihilator) and `c` (creator), read left to right;
            "ca" is the number operator a†a.

            Operations:
            - normal_order: Σ c(r,s) (a†)ʳ aˢ with every creator to the left.
            - nhat_power: (a†a)ⁿ = Σₖ S(n,k) (a†)ᵏ aᵏ.
            - coherent_expectation: ⟨z|word|z⟩ as a polynomial in z, z̄; `ybar` or `z` evaluate it.
            - egf_expectation: ⟨z|exp(x·word)|z⟩ to order N; needs `z` for unbalanced words.
            - fock_oracle: floating-point ⟨z|wordⁿ|z⟩ in a truncated Fock space of dimension `dim`.

            Args:
                operation: Must be one of the Literal values.
                word: Boson word; empty means the identity.
                n: Power for nhat_power and fock_oracle.
                order: Truncation order (config default when omitted).
                ybar: Rational |z|² for evaluation.
                z: Real rational z for evaluation.
                dim: Fock-space dimension for fock_oracle.

            Errors:
                WordParseError for letters other than a/c; DomainError for symbolic EGFs of
                unbalanced words; ConvergenceError when the Fock truncation is too small.
            """
            return await bell_boson_tool(
                operation=operation,
                word=word,
                n=n,
                order=order,
                ybar=ybar,
                z=z,
                dim=dim,
                config=self.config,
            )

        @self.mcp.tool(annotations=_READ_ONLY)
        async def bell_diagrams(
            operation: BellDiagramsOperation,
            n: int = 3,
            shape: str = "",
            monomial: str = "",
        ) -> dict[str, Any]:
            """BELL_DIAGRAMS: Labeled bipartite diagrams, their shapes and BELL monomial codes.

            A diagram on n lines is a set partition of {1..n}: each block is one black dot joined
            to the white dots of its labels. The shape is the multiset of block sizes and codes
            as the monomial Π y_k^{m_k}.

            Operations:
            - enumerate: every diagram on n lines (n ≤ max_listing_n) with shape and code.
            - census: count of labeled diagrams per shape of weight n, closed form.
            - multiplicity: count for one shape, e.g. shape="2,1".
            - code: shape → monomial, or monomial → shape (monomial="y1*y2").
            - dot: Graphviz DOT text for every diagram on n lines.
            """
            return await bell_diagrams_tool(
                operation=operation, n=n, shape=shape, monomial=monomial, config=self.config
            )

        @self.mcp.tool(annotations=_READ_ONLY)
        async def bell_hopf(
            operation: BellHopfOperation,
            element: str = "e",
            other: str = "e",
            alphabet: Literal["poly", "bell"] = "bell",
            weight_bound: int | None = None,
            samples: int | None = None,
            seed: int | None = None,
        ) -> dict[str, Any]:
            """BELL_HOPF: The commutative, cocommutative Hopf algebras POLY and BELL.

            Elements are rational combinations of monomials, e.g. "3/2*y1^2*y3 + y2 - e".
            POLY has the single letter y1; BELL has y1, y2, … with weight Σ k·(exponent of y_k).

            Operations:
            - product / coproduct / counit / antipode: the structure maps.
            - convolve: m(S⊗id)Δ and m(id⊗S)Δ, both equal to ε(element)·e.
            - grade: split the element into homogeneous weight components.
            - check_axioms: verify the Hopf axioms on the basis up to weight_bound plus
              seeded random combinations.
            """
            return await bell_hopf_tool(
                operation=operation,
                element=element,
                other=other,
                alphabet=alphabet,
                weight_bound=weight_bound,
                samples=samples,
                seed=seed,
                config=self.config,
            )

        @self.mcp.tool(annotations=_READ_ONLY)
        async def bell_statmech(
            operation: BellStatmechOperation,
            word: str = "ca",
            order: int | None = None,
            z: str = "",
            beta_eps: str = "ln2",
            method: Literal["closed", "quadrature", "radial", "both", "enumerate"] = "closed",
            upper: float | None = None,
            steps: int | None = None,
            values: str = "",
            n: int = 0,
        ) -> dict[str, Any]:
            """BELL_STATMECH: Partition-function integrand, moments/cumulants and free-boson Z.

            Operations:
            - pfi_free_boson: ⟨z|exp(x a†a)|z⟩ = exp(ybar(eˣ−1)), coefficients Bₙ(ybar).
            - pfi_general: moments W and cumulants V for any model word.
            - partition_function: Z = 1/(1−e^{−βε}) via closed, quadrature, radial or both.
              beta_eps accepts decimals, rationals and lnK.
            - divergence_report: show that every term of the expanded y-integral diverges.
            - moments_to_cumulants / cumulants_to_moments: convert comma-separated `values`.
            - graph_expansion: Wₙ as a sum over labeled diagrams with vertex weights V.
            """
            return await bell_statmech_tool(
                operation=operation,
                word=word,
                order=order,
                z=z,
                beta_eps=beta_eps,
                method=method,
                upper=upper,
                steps=steps,
                values=values,
                n=n,
                config=self.config,
            )

        @self.mcp.tool(annotations=_READ_ONLY)
        async def bell_system(operation: BellSystemOperation) -> dict[str, Any]:
            """BELL_SYSTEM: Server status, effective configuration and version.

            Operations: status, config, version.
            """
            return await bell_system_tool(operation=operation, config=self.config)


async def main_async() -> int:
    """Async entry point."""
    parser = argparse.ArgumentParser(description=SERVER_NAME)
    parser.add_argument("--config", type=str, help="Path to config file", default=None)
    parser.add_argument("--mode", choices=["stdio", "http"], default=None)
    parser.add_argument("--port", type=int, default=None, help="HTTP port when --mode http is used")
    parser.add_argument("--host", default=None)
    parser.add_argument("--log-level", default="INFO")
    args = parser.parse_args()

    setup_logging(log_level=args.log_level, component="main", force=True)

    # An explicit --mode wins; otherwise MCP_TRANSPORT decides.
    if args.mode is not None:
        os.environ["MCP_TRANSPORT"] = args.mode
    else:
        os.environ.setdefault("MCP_TRANSPORT", "stdio")

    try:
        server = BellHopfMcpServer(config_path=Path(args.config) if args.config else None)
        if not await server.initialize():
            return 1
        transport_args = argparse.Namespace(
            stdio=args.mode == "stdio",
            http=args.mode == "http",
            host=args.host,
            port=args.port,
            path=None,
            debug=args.log_level.upper() == "DEBUG",
        )
        await run_server_async(server.mcp, args=transport_args, server_name=SERVER_NAME)
    except KeyboardInterrupt:
        logger.info("Server stopped by user")
    except Exception as e:
        logger.error(f"Server error: {e}")
        return 1
    return 0


def main() -> int:
    """Main entry point."""
    try:
        return asyncio.run(main_async())
    except Exception as e:
        print(f"Unhandled error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
