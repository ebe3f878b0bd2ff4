"""Finite and symbolic models of local Boolean algebras, local contact
algebras and their dual spaces."""

from .ba import FINCOFIN, FC, FiniteAlgebra, Ideal, Powerset, fin_ideal, whole
from .contact import ContactTriple, check_axioms, rho_s
from .errors import ArtifactError
from .topo import FinSpace, SpaceMap

__version__ = "0.1.0"

__all__ = [
    "FINCOFIN", "FC", "FiniteAlgebra", "Ideal", "Powerset", "fin_ideal", "whole",
    "ContactTriple", "check_axioms", "rho_s", "ArtifactError", "FinSpace", "SpaceMap",
]
