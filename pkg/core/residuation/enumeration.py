"""
Enumeration of small residuation algebras through their multiplication tables.
"""

import logging
from typing import Iterator

from core.lattice import FiniteDistLattice
from core.operators import enumerate_operators
from core.order import ProductPoset, enumerate_monotone_maps

from .algebra import ResiduationAlgebra, from_multiplication
from .classify import classify

logger = logging.getLogger(__name__)


def enumerate_residuation_algebras(d: FiniteDistLattice) -> Iterator[ResiduationAlgebra]:
    """Every residuation algebra on d, one per monotone table of mu on prime pairs."""
    count = 0
    for op in enumerate_operators(d, 2, 1):
        count += 1
        yield from_multiplication(d, op)
    logger.debug(f"Enumerated {count} residuation algebras over {d.base.n} join-primes")


def enumerate_derivation_algebras(d: FiniteDistLattice) -> Iterator[ResiduationAlgebra]:
    """
    Every derivation algebra on d.

    Purity forces mu to send prime pairs to primes, so only monotone maps
    J x J -> J are tried before the associativity and unit checks.
    """
    pairs = ProductPoset([d.base, d.base])
    for phi in enumerate_monotone_maps(pairs, d.base):
        r = from_multiplication(d, tuple(d.primes[v] for v in phi.table))
        if classify(r).derivation:
            yield r
