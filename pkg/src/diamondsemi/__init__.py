"""Endomorphism semirings of the diamond join-semilattice.

Construction of the full semiring and its named subfamilies, generic
finite-semiring analysis (laws, classification, ideals, congruences,
isomorphism search) and an executable registry of structural claims.
"""

from .lattice import Diamond, LatticeElement, atom, bottom, top
from .endo import Endo, EndoSemiring, build_semiring, enumerate_all, validate

__all__ = [
    "Diamond",
    "LatticeElement",
    "atom",
    "bottom",
    "top",
    "Endo",
    "EndoSemiring",
    "build_semiring",
    "enumerate_all",
    "validate",
]

__version__ = "0.1.0"
