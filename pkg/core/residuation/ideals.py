"""
Residuation ideals: bounded sublattices closed under division by arbitrary
elements, and their presentation as residuation algebras in canonical form.
"""

import logging
from typing import Iterable, List, Tuple

import numpy as np

from core.exceptions import ResiduationPropertyError
from core.lattice import AbstractLattice, canonicalize
from core.order import is_subset

from .algebra import ResiduationAlgebra

logger = logging.getLogger(__name__)


def residuation_ideal(
    r: ResiduationAlgebra, seed: Iterable[int], complemented: bool = False
) -> Tuple[int, ...]:
    """
    Least bounded sublattice containing seed and closed under z\\x and x/z for
    every element z of the algebra and x in the ideal.

    Division by a join z = p1 \\/ ... \\/ pk is the meet of the divisions by
    the primes, and division by bottom is top, so closing under the primes
    suffices. With complemented=True the ideal is also closed under Boolean
    complement.
    """
    d = r.lattice
    if complemented and not d.is_boolean:
        raise ResiduationPropertyError(
            "Complemented ideals need a Boolean carrier", error_code="RESIDUATION_NOT_BOOLEAN"
        )
    members = {d.bottom, d.top}
    queue: List[int] = [d.bottom, d.top]
    for x in seed:
        d.check_element(x)
        if x not in members:
            members.add(x)
            queue.append(x)

    def offer(y: int) -> None:
        if y not in members:
            members.add(y)
            queue.append(y)

    while queue:
        x = queue.pop()
        for p in d.primes:
            offer(r.ldiv(p, x))
            offer(r.rdiv(x, p))
        if complemented:
            offer(d.top & ~x)
        for y in list(members):
            offer(x | y)
            offer(x & y)
    ideal = tuple(sorted(members))
    logger.debug(f"Residuation ideal closed with {len(ideal)} elements")
    return ideal


def ideal_algebra(
    r: ResiduationAlgebra, ideal: Tuple[int, ...]
) -> Tuple[ResiduationAlgebra, Tuple[int, ...]]:
    """
    The ideal as a residuation algebra over its own join-primes.

    Returns (algebra, embedding) where embedding[i] is the element of r
    represented by the i-th element of the canonical lattice.
    """
    ideal = tuple(sorted(ideal))
    leq = np.array([[is_subset(a, b) for b in ideal] for a in ideal], dtype=bool)
    lattice, iso = canonicalize(AbstractLattice(leq))
    to_canonical = {x: iso[i] for i, x in enumerate(ideal)}
    from_canonical = {iso[i]: x for i, x in enumerate(ideal)}

    def lift(f):
        def apply(a: int, b: int) -> int:
            value = f(from_canonical[a], from_canonical[b])
            if value not in to_canonical:
                raise ResiduationPropertyError(
                    "Ideal is not closed under residuals",
                    error_code="RESIDUATION_IDEAL_NOT_CLOSED",
                    details={"arguments": [from_canonical[a], from_canonical[b]]},
                )
            return to_canonical[value]

        return apply

    algebra = ResiduationAlgebra(lattice, lift(r.ldiv), lift(r.rdiv))
    embedding = tuple(from_canonical[x] for x in lattice.elements)
    return algebra, embedding
