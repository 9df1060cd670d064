"""
Bell/Hopf - exact Bell combinatorics, boson normal ordering and the BELL Hopf algebra.

Library, `bell-hopf` command line and an MCP server with portmanteau tools:

- bell_combinatorics: Stirling and Bell numbers, Bell polynomials, set partitions
- bell_boson: normal ordering, coherent-state expectations, Fock-space oracle
- bell_diagrams: labeled diagrams, shapes, monomial codes, DOT export
- bell_hopf: product, coproduct, counit, antipode and axiom checks for POLY/BELL
- bell_statmech: partition function integrand, moments/cumulants, free-boson Z
- bell_system: status, configuration and version

Author: Sandra Schipal
License: MIT
"""

__version__ = "0.4.0"
__author__ = "Sandra Schipal"
__email__ = "sandra@sandraschi.dev"

from .boson import BosonWord
from .boson import NormalForm
from .boson import normal_order
from .combinatorics import bell
from .combinatorics import bell_polynomial
from .combinatorics import stirling2
from .hopf import AlgebraElement
from .hopf import AlphabetSpec
from .hopf import Monomial
from .series import ExpSeries

__all__ = [
    "AlgebraElement",
    "AlphabetSpec",
    "BosonWord",
    "ExpSeries",
    "Monomial",
    "NormalForm",
    "bell",
    "bell_polynomial",
    "normal_order",
    "stirling2",
]
