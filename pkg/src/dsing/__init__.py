"""Exact singularity tests for Cayley graphs of cyclic and dihedral groups."""
from .group import (
    CayleyGraph,
    ConnectingSet,
    DihedralElement,
    build_cayley_graph,
    parse_connecting_set,
    validate_connecting_set,
)
from .polynomial import IntPolynomial, cyclotomic
from .report import SingularityReport, check

__version__ = "0.1.0"
