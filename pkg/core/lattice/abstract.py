"""
Abstract lattices given by an order matrix, and their canonicalization.
"""

import logging
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from core.exceptions import InvalidPosetError, NotALatticeError, NotDistributiveError
from core.order import Poset

from .lattice import FiniteDistLattice

logger = logging.getLogger(__name__)


class AbstractLattice:
    """
    Lattice presented by its order matrix on elements 0..n-1.

    Binary joins and meets are computed and checked on construction;
    distributivity is checked by canonicalize.
    """

    def __init__(self, leq: np.ndarray):
        try:
            self.order = Poset(leq)
        except InvalidPosetError as e:
            raise NotALatticeError(
                f"Order matrix is not a partial order: {e.message}",
                error_code="LATTICE_NOT_AN_ORDER",
                details=e.details,
            ) from e
        self.n = self.order.n
        if self.n == 0:
            raise NotALatticeError(
                "A lattice needs at least one element", error_code="LATTICE_EMPTY"
            )
        self.joins = self._bounds(self.order.up, least=True)
        self.meets = self._bounds(self.order.down, least=False)

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[Tuple[int, int]]) -> "AbstractLattice":
        return cls(Poset.from_pairs(n, pairs).leq)

    def _bounds(self, cones: Tuple[int, ...], least: bool) -> Tuple[Tuple[int, ...], ...]:
        table: List[Tuple[int, ...]] = []
        for x in range(self.n):
            row = []
            for y in range(self.n):
                common = cones[x] & cones[y]
                extreme = self.order.minimal(common) if least else self.order.maximal(common)
                if len(extreme) != 1:
                    kind = "join" if least else "meet"
                    raise NotALatticeError(
                        f"Elements {x} and {y} have no {kind}",
                        error_code=f"LATTICE_NO_{kind.upper()}",
                        details={"witness": [x, y]},
                    )
                row.append(extreme[0])
            table.append(tuple(row))
        return tuple(table)

    def join(self, x: int, y: int) -> int:
        return self.joins[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meets[x][y]

    @cached_property
    def bottom(self) -> int:
        return self.order.minimal(self.order.full_mask)[0]

    def distributivity_failure(self):
        """First triple (x, y, z) with x /\\ (y \\/ z) != (x /\\ y) \\/ (x /\\ z), or None."""
        for x in range(self.n):
            for y in range(self.n):
                for z in range(self.n):
                    lhs = self.meet(x, self.join(y, z))
                    rhs = self.join(self.meet(x, y), self.meet(x, z))
                    if lhs != rhs:
                        return x, y, z
        return None

    def join_primes(self) -> Tuple[int, ...]:
        """Nonzero x with x <= u \\/ v implying x <= u or x <= v."""
        primes = []
        for x in range(self.n):
            if x == self.bottom:
                continue
            if all(
                self.order.le(x, u) or self.order.le(x, v)
                for u in range(self.n)
                for v in range(self.n)
                if self.order.le(x, self.join(u, v))
            ):
                primes.append(x)
        return tuple(primes)


def canonicalize(a: AbstractLattice) -> Tuple[FiniteDistLattice, Tuple[int, ...]]:
    """
    Downset lattice over the join-primes of a, with the isomorphism.

    Returns (lattice, iso) where iso[x] is the downset mask of the primes below x,
    indexing primes in increasing element order.
    """
    witness = a.distributivity_failure()
    if witness is not None:
        raise NotDistributiveError(
            f"Distributive law fails at {witness}",
            error_code="LATTICE_NOT_DISTRIBUTIVE",
            details={"witness": list(witness)},
        )
    primes = a.join_primes()
    base = Poset(a.order.leq[np.ix_(np.array(primes, dtype=int), np.array(primes, dtype=int))])
    lattice = FiniteDistLattice(base)
    iso = tuple(
        sum(1 << i for i, p in enumerate(primes) if a.order.le(p, x)) for x in range(a.n)
    )
    if sorted(iso) != list(lattice.elements):
        raise NotDistributiveError(
            "Join-prime representation is not bijective", error_code="LATTICE_NOT_DISTRIBUTIVE"
        )
    logger.debug(f"Canonicalized lattice of size {a.n} over {len(primes)} join-primes")
    return lattice, iso
