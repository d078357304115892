"""Exact quiver stability toolkit: generic hom/ext, stable decompositions,
domains of semi-invariants, cluster fans and a finite-field oracle."""

from quiverfan.errors import (
    ConsistencyError,
    CycleError,
    InvalidInputError,
    ParseError,
    QuiverError,
    ResourceError,
    UnknownVertexError,
)
from quiverfan.quiver import Quiver, euler_form, parse_quiver, projective_root

__all__ = [
    "ConsistencyError",
    "CycleError",
    "InvalidInputError",
    "ParseError",
    "Quiver",
    "QuiverError",
    "ResourceError",
    "UnknownVertexError",
    "euler_form",
    "parse_quiver",
    "projective_root",
]

__version__ = "0.1.0"
