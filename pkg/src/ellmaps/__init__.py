"""Exact root-system arithmetic for moduli of elliptic curves in homogeneous spaces."""

from .parabolic import SpaceDescriptor, descriptor, space_descriptor
from .rootsys import RootSystemId, root_system
from .strata import catalog_entry, min_irreducible_degree

__all__ = [
    "RootSystemId",
    "SpaceDescriptor",
    "catalog_entry",
    "descriptor",
    "min_irreducible_degree",
    "root_system",
    "space_descriptor",
]
__version__ = "0.1.0"
