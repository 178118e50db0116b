#!/usr/bin/env python3
"""
Finite Distributive Lattices
Canonical downset representation and Birkhoff duality on objects and morphisms.

A lattice is determined by its base poset of join-primes; its elements are the
downset masks of the base, ordered by inclusion. The join-prime below base
element p is the principal downset base.down[p].
"""

import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Dict, Iterable, Iterator, Optional, Tuple

from core.exceptions import HomomorphismError, LatticeMismatchError
from core.order import MonotoneMap, Poset, is_subset, iter_bits

logger = logging.getLogger(__name__)


class FiniteDistLattice:
    """Downset lattice of a finite poset."""

    def __init__(self, base: Poset):
        self.base = base
        logger.debug(f"Lattice over base of size {base.n} initialized")

    def __repr__(self) -> str:
        return f"FiniteDistLattice(base={self.base!r}, size={self.size})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteDistLattice):
            return NotImplemented
        return self.base == other.base

    def __hash__(self) -> int:
        return hash(("lattice", self.base))

    @cached_property
    def elements(self) -> Tuple[int, ...]:
        """All elements in ascending mask order; bottom first, top last."""
        return self.base.downsets

    @cached_property
    def index(self) -> Dict[int, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.base.full_mask

    @cached_property
    def primes(self) -> Tuple[int, ...]:
        """Join-primes, listed by base element."""
        return self.base.down

    @cached_property
    def is_boolean(self) -> bool:
        return self.base.is_discrete

    def contains(self, x: int) -> bool:
        return 0 <= x and not x & ~self.top and self.base.is_downset(x)

    def check_element(self, x: int) -> None:
        if not self.contains(x):
            raise LatticeMismatchError(
                f"Mask {x:b} is not an element of {self!r}", error_code="NOT_AN_ELEMENT"
            )

    @staticmethod
    def join(x: int, y: int) -> int:
        return x | y

    @staticmethod
    def meet(x: int, y: int) -> int:
        return x & y

    @staticmethod
    def leq(x: int, y: int) -> bool:
        return is_subset(x, y)

    def join_all(self, xs: Iterable[int]) -> int:
        return reduce(lambda a, b: a | b, xs, 0)

    def meet_all(self, xs: Iterable[int]) -> int:
        return reduce(lambda a, b: a & b, xs, self.top)

    def prime_of(self, x: int) -> Optional[int]:
        """Base element p with x = down[p], or None when x is not join-prime."""
        maximal = self.base.maximal(x)
        if len(maximal) == 1 and self.base.down[maximal[0]] == x:
            return maximal[0]
        return None

    def is_join_prime(self, x: int) -> bool:
        return self.prime_of(x) is not None

    def complement(self, x: int) -> int:
        """Boolean complement; raises on non-Boolean lattices."""
        if not self.is_boolean:
            raise LatticeMismatchError(
                "Complement requires a Boolean lattice", error_code="NOT_BOOLEAN"
            )
        return self.top & ~x

    def heyting(self, a: int, c: int) -> int:
        """Relative pseudo-complement a -> c."""
        return sum(1 << p for p in range(self.base.n) if is_subset(self.base.down[p] & a, c))

    def pairs(self) -> Iterator[Tuple[int, int]]:
        for x in self.elements:
            for y in self.elements:
                yield x, y


def from_poset(p: Poset) -> FiniteDistLattice:
    """The downset lattice of p."""
    return FiniteDistLattice(p)


def dual_poset(d: FiniteDistLattice) -> Poset:
    """Poset of join-primes with the inherited order."""
    return d.base


TWO = FiniteDistLattice(Poset.from_pairs(1, []))


@dataclass(frozen=True)
class LatticeMap:
    """
    Monotone map between downset lattices, stored as a full element table.

    table[i] is the image of dom.elements[i].
    """

    dom: FiniteDistLattice
    cod: FiniteDistLattice
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.dom.size:
            raise HomomorphismError(
                f"Table has {len(self.table)} entries for a lattice of size {self.dom.size}",
                error_code="MAP_BAD_TABLE",
            )
        for value in self.table:
            self.cod.check_element(value)
        for x, y in self.dom.pairs():
            if is_subset(x, y) and not is_subset(self(x), self(y)):
                raise HomomorphismError(
                    "Map is not monotone",
                    error_code="MAP_NOT_MONOTONE",
                    details={"witness": [x, y]},
                )

    @classmethod
    def from_function(cls, dom: FiniteDistLattice, cod: FiniteDistLattice, fn) -> "LatticeMap":
        return cls(dom, cod, tuple(fn(x) for x in dom.elements))

    @classmethod
    def from_prime_values(
        cls, dom: FiniteDistLattice, cod: FiniteDistLattice, values: Tuple[int, ...]
    ) -> "LatticeMap":
        """Join-preserving extension of values on the join-primes of dom."""

        def extend(x: int) -> int:
            out = 0
            for p in iter_bits(x):
                out |= values[p]
            return out

        return cls.from_function(dom, cod, extend)

    @classmethod
    def identity(cls, d: FiniteDistLattice) -> "LatticeMap":
        return cls(d, d, d.elements)

    def __eq__(self, other: object) -> bool:
        # homs and plain maps with the same table are the same map
        if not isinstance(other, LatticeMap):
            return NotImplemented
        return (self.dom, self.cod, self.table) == (other.dom, other.cod, other.table)

    def __call__(self, x: int) -> int:
        return self.table[self.dom.index[x]]

    def then(self, other: "LatticeMap") -> "LatticeMap":
        """Diagrammatic composite: first self, then other."""
        if other.dom != self.cod:
            raise LatticeMismatchError(
                "Cannot compose lattice maps with mismatched lattices",
                error_code="LATTICE_MISMATCH",
            )
        return LatticeMap(self.dom, other.cod, tuple(other(v) for v in self.table))

    def prime_values(self) -> Tuple[int, ...]:
        return tuple(self(p) for p in self.dom.primes)

    # Preservation predicates; each *_failure returns the first witness or None

    def join_failure(self) -> Optional[Tuple[int, int]]:
        for x, y in self.dom.pairs():
            if self(x | y) != self(x) | self(y):
                return x, y
        return None

    def meet_failure(self) -> Optional[Tuple[int, int]]:
        for x, y in self.dom.pairs():
            if self(x & y) != self(x) & self(y):
                return x, y
        return None

    def preserves_joins(self) -> bool:
        return self.join_failure() is None

    def preserves_meets(self) -> bool:
        return self.meet_failure() is None

    def preserves_bottom(self) -> bool:
        return self(self.dom.bottom) == self.cod.bottom

    def preserves_top(self) -> bool:
        return self(self.dom.top) == self.cod.top

    def is_join_preserving(self) -> bool:
        """Preserves all finite joins, the empty one included."""
        return self.preserves_bottom() and self.preserves_joins()

    def is_meet_preserving(self) -> bool:
        """Preserves all finite meets, the empty one included."""
        return self.preserves_top() and self.preserves_meets()

    def is_homomorphism(self) -> bool:
        return self.is_join_preserving() and self.is_meet_preserving()

    def as_hom(self) -> "LatticeHom":
        return LatticeHom(self.dom, self.cod, self.table)


class LatticeHom(LatticeMap):
    """Bounded lattice homomorphism, checked exhaustively on construction."""

    def __post_init__(self):
        super().__post_init__()
        if not self.preserves_bottom():
            raise HomomorphismError("Map does not preserve bottom", error_code="HOM_BOTTOM")
        if not self.preserves_top():
            raise HomomorphismError("Map does not preserve top", error_code="HOM_TOP")
        witness = self.join_failure()
        if witness is not None:
            raise HomomorphismError(
                "Map does not preserve binary joins",
                error_code="HOM_JOIN",
                details={"witness": list(witness)},
            )
        witness = self.meet_failure()
        if witness is not None:
            raise HomomorphismError(
                "Map does not preserve binary meets",
                error_code="HOM_MEET",
                details={"witness": list(witness)},
            )

    @classmethod
    def identity(cls, d: FiniteDistLattice) -> "LatticeHom":
        return cls(d, d, d.elements)

    def then(self, other: LatticeMap) -> LatticeMap:
        composite = super().then(other)
        return composite.as_hom() if isinstance(other, LatticeHom) else composite


def dualize_hom(f: LatticeHom) -> MonotoneMap:
    """
    Restriction of the left adjoint of f to join-primes.

    Returns the monotone map J(cod) -> J(dom) sending q to the prime p with
    f*(down q) = down p.
    """
    table = []
    for q, prime in enumerate(f.cod.primes):
        lower = f.dom.meet_all(x for x in f.dom.elements if is_subset(prime, f(x)))
        p = f.dom.prime_of(lower)
        if p is None:
            raise HomomorphismError(
                f"Left adjoint sends prime {q} to a non-prime",
                error_code="HOM_ADJOINT_NOT_PRIME",
                details={"prime": q, "image": lower},
            )
        table.append(p)
    return MonotoneMap(f.cod.base, f.dom.base, tuple(table))


def dualize_map(phi: MonotoneMap) -> LatticeHom:
    """Inverse image S -> phi^-1[S] from D(cod) to D(dom)."""
    dom = FiniteDistLattice(phi.cod)
    cod = FiniteDistLattice(phi.dom)
    return LatticeHom(dom, cod, tuple(phi.preimage(s) for s in dom.elements))


def enumerate_join_maps(d: FiniteDistLattice, e: FiniteDistLattice) -> Iterator[LatticeMap]:
    """All maps d -> e preserving finite joins (monotone prime tables, extended)."""
    order = d.base.linear_extension
    values = [0] * d.base.n

    def extend(pos: int) -> Iterator[LatticeMap]:
        if pos == len(order):
            yield LatticeMap.from_prime_values(d, e, tuple(values))
            return
        p = order[pos]
        floor = 0
        for q in iter_bits(d.base.down[p] & ~(1 << p)):
            floor |= values[q]
        for v in e.elements:
            if is_subset(floor, v):
                values[p] = v
                yield from extend(pos + 1)

    yield from extend(0)


def enumerate_homs(d: FiniteDistLattice, e: FiniteDistLattice) -> Iterator[LatticeHom]:
    """All bounded lattice homomorphisms d -> e."""
    for f in enumerate_join_maps(d, e):
        if f.is_meet_preserving():
            yield f.as_hom()
