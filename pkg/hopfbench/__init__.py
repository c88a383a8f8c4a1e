"""Exact computer-algebra workbench for small pointed Hopf algebras."""

from hopfbench.gf import Field, make_field
from hopfbench.freealg import Alphabet, NcPoly, parse_poly
from hopfbench.rewrite import RewriteSystem, complete, enumerate_basis
from hopfbench.findim import FinAlgebra
from hopfbench.hopf import HopfAlgebra, HopfPresentation, build_hopf
from hopfbench.nichols import BraidedSpace, make_braided, nichols_dims

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BraidedSpace",
    "Field",
    "FinAlgebra",
    "HopfAlgebra",
    "HopfPresentation",
    "NcPoly",
    "RewriteSystem",
    "build_hopf",
    "complete",
    "enumerate_basis",
    "make_braided",
    "make_field",
    "nichols_dims",
    "parse_poly",
]
