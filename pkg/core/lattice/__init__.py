"""
Lattice Module
Finite distributive lattices, Birkhoff duality and adjoints.
"""

from .abstract import AbstractLattice, canonicalize
from .adjoints import is_adjunction, left_adjoint, right_adjoint
from .lattice import (
    TWO,
    FiniteDistLattice,
    LatticeHom,
    LatticeMap,
    dual_poset,
    dualize_hom,
    dualize_map,
    enumerate_homs,
    enumerate_join_maps,
    from_poset,
)

__version__ = "0.1.0"
__all__ = [
    "AbstractLattice",
    "FiniteDistLattice",
    "LatticeHom",
    "LatticeMap",
    "TWO",
    "canonicalize",
    "dual_poset",
    "dualize_hom",
    "dualize_map",
    "enumerate_homs",
    "enumerate_join_maps",
    "from_poset",
    "is_adjunction",
    "left_adjoint",
    "right_adjoint",
]
