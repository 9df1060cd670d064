"""MCP-exposed Literal aliases for portmanteau `operation` params.

Keep in sync with the dispatchers in `tools/`.
"""

from __future__ import annotations

from typing import Literal

BellCombinatoricsOperation = Literal[
    "bell",
    "stirling",
    "bell_polynomial",
    "set_partitions",
]

BellBosonOperation = Literal[
    "normal_order",
    "nhat_power",
    "coherent_expectation",
    "egf_expectation",
    "fock_oracle",
]

BellDiagramsOperation = Literal[
    "enumerate",
    "census",
    "multiplicity",
    "code",
    "dot",
]

BellHopfOperation = Literal[
    "product",
    "coproduct",
    "counit",
    "antipode",
    "convolve",
    "grade",
    "check_axioms",
]

BellStatmechOperation = Literal[
    "pfi_free_boson",
    "pfi_general",
    "partition_function",
    "divergence_report",
    "moments_to_cumulants",
    "cumulants_to_moments",
    "graph_expansion",
]

BellSystemOperation = Literal[
    "status",
    "config",
    "version",
]
