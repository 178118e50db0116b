#!/usr/bin/env python3
"""
Finite Ordered Monoids
Multiplication tables over a poset carrier, homomorphisms, isomorphism and
enumeration of small instances.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import InvalidMonoidError, NotAHomomorphismError, OrderError
from core.order import MonotoneMap, Poset, antichain, enumerate_posets, relabel

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class OrderedMonoid:
    """
    Monoid on the elements of a poset with a monotone multiplication.

    mult[x][y] is the product xy; a discrete carrier gives a plain monoid.
    """

    carrier: Poset
    mult: Table
    unit: int

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(tuple(int(v) for v in row) for row in self.mult))
        n = self.carrier.n
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise InvalidMonoidError(
                f"Multiplication table must be {n} x {n}", error_code="MONOID_BAD_TABLE"
            )
        if any(not 0 <= v < n for row in self.mult for v in row):
            raise InvalidMonoidError(
                "Multiplication table leaves the carrier", error_code="MONOID_BAD_TABLE"
            )
        if not 0 <= self.unit < n:
            raise InvalidMonoidError(f"Unit {self.unit} out of range", error_code="MONOID_BAD_UNIT")
        for x in range(n):
            if self.mult[self.unit][x] != x or self.mult[x][self.unit] != x:
                raise InvalidMonoidError(
                    f"{self.unit} is not a two-sided unit",
                    error_code="MONOID_BAD_UNIT",
                    details={"witness": x},
                )
        witness = associativity_failure(self.mult)
        if witness is not None:
            raise InvalidMonoidError(
                "Multiplication is not associative",
                error_code="MONOID_NOT_ASSOCIATIVE",
                details={"witness": list(witness)},
            )
        for x in range(n):
            for x2 in range(n):
                if not self.carrier.le(x, x2):
                    continue
                for y in range(n):
                    if not (
                        self.carrier.le(self.mult[x][y], self.mult[x2][y])
                        and self.carrier.le(self.mult[y][x], self.mult[y][x2])
                    ):
                        raise InvalidMonoidError(
                            "Multiplication is not monotone",
                            error_code="MONOID_NOT_MONOTONE",
                            details={"witness": [x, x2, y]},
                        )

    @classmethod
    def discrete(cls, mult: Sequence[Sequence[int]], unit: int = 0) -> "OrderedMonoid":
        return cls(antichain(len(mult)), tuple(tuple(row) for row in mult), unit)

    @property
    def n(self) -> int:
        return self.carrier.n

    def __call__(self, x: int, y: int) -> int:
        return self.mult[x][y]

    def multiply_sets(self, a: int, b: int) -> int:
        """Mask of all products xy with x in a and y in b."""
        out = 0
        for x in range(self.n):
            if a >> x & 1:
                for y in range(self.n):
                    if b >> y & 1:
                        out |= 1 << self.mult[x][y]
        return out

    @cached_property
    def is_commutative(self) -> bool:
        return all(self.mult[x][y] == self.mult[y][x] for x in range(self.n) for y in range(x))

    def label(self, x: int) -> str:
        return self.carrier.label(x)


def associativity_failure(mult: Table) -> Optional[Tuple[int, int, int]]:
    n = len(mult)
    for x in range(n):
        for y in range(n):
            xy = mult[x][y]
            for z in range(n):
                if mult[xy][z] != mult[x][mult[y][z]]:
                    return x, y, z
    return None


def trivial_monoid() -> OrderedMonoid:
    return OrderedMonoid.discrete([[0]])


def cyclic_group(n: int) -> OrderedMonoid:
    """Z/n with 0 as unit."""
    return OrderedMonoid.discrete([[(x + y) % n for y in range(n)] for x in range(n)])


def free_idempotent_pair() -> OrderedMonoid:
    """{1, a} with aa = a."""
    return OrderedMonoid.discrete([[0, 1], [1, 1]])


@dataclass(frozen=True)
class MonoidHom:
    """Monotone monoid homomorphism, as an image table."""

    dom: OrderedMonoid
    cod: OrderedMonoid
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        try:
            self.as_monotone_map()
        except OrderError as e:
            raise NotAHomomorphismError(
                f"Not a monotone map: {e}", error_code="MONOID_HOM_NOT_MONOTONE"
            ) from e
        if self.table[self.dom.unit] != self.cod.unit:
            raise NotAHomomorphismError("Unit is not preserved", error_code="MONOID_HOM_UNIT")
        for x in range(self.dom.n):
            for y in range(self.dom.n):
                if self.table[self.dom(x, y)] != self.cod(self.table[x], self.table[y]):
                    raise NotAHomomorphismError(
                        "Multiplication is not preserved",
                        error_code="MONOID_HOM_MULT",
                        details={"witness": [x, y]},
                    )

    def __call__(self, x: int) -> int:
        return self.table[x]

    def as_monotone_map(self) -> MonotoneMap:
        return MonotoneMap(self.dom.carrier, self.cod.carrier, self.table)

    def then(self, other: "MonoidHom") -> "MonoidHom":
        """Diagrammatic composite: first self, then other."""
        return MonoidHom(self.dom, other.cod, tuple(other(y) for y in self.table))

    @property
    def is_surjective(self) -> bool:
        return set(self.table) == set(range(self.cod.n))

    @classmethod
    def identity(cls, m: OrderedMonoid) -> "MonoidHom":
        return cls(m, m, tuple(range(m.n)))


def enumerate_monoid_homs(m: OrderedMonoid, k: OrderedMonoid) -> Iterator[MonoidHom]:
    for table in product(range(k.n), repeat=m.n):
        try:
            yield MonoidHom(m, k, table)
        except NotAHomomorphismError:
            continue


def relabel_monoid(m: OrderedMonoid, perm: Sequence[int]) -> OrderedMonoid:
    """Copy of m in which old element i is called perm[i]."""
    n = m.n
    mult = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            mult[perm[x]][perm[y]] = perm[m.mult[x][y]]
    return OrderedMonoid(relabel(m.carrier, perm), tuple(map(tuple, mult)), perm[m.unit])


def canonical_form(m: OrderedMonoid) -> Tuple[int, bytes, Table]:
    """Least (unit, order bits, table) over all relabellings."""
    best = None
    for perm in permutations(range(m.n)):
        r = relabel_monoid(m, perm)
        key = (r.unit, np.packbits(r.carrier.leq).tobytes(), r.mult)
        if best is None or key < best:
            best = key
    return best


def is_isomorphic(m1: OrderedMonoid, m2: OrderedMonoid) -> bool:
    return m1.n == m2.n and canonical_form(m1) == canonical_form(m2)


def find_isomorphism(m1: OrderedMonoid, m2: OrderedMonoid) -> Optional[Tuple[int, ...]]:
    """A bijection preserving order, unit and multiplication, or None."""
    if m1.n != m2.n:
        return None
    for perm in permutations(range(m1.n)):
        if relabel_monoid(m1, perm) == m2:
            return tuple(perm)
    return None


def _labelled_posets(n: int) -> List[Poset]:
    seen: Dict[bytes, Poset] = {}
    for p in enumerate_posets(n):
        for perm in permutations(range(n)):
            q = relabel(p, perm)
            seen.setdefault(np.packbits(q.leq).tobytes(), q)
    return [seen[key] for key in sorted(seen)]


def _monoid_tables(n: int) -> Iterator[Table]:
    """Associative tables on range(n) with unit 0."""
    free = [(x, y) for x in range(1, n) for y in range(1, n)]
    for values in product(range(n), repeat=len(free)):
        mult = [[y if x == 0 else (x if y == 0 else 0) for y in range(n)] for x in range(n)]
        for (x, y), v in zip(free, values):
            mult[x][y] = v
        table = tuple(map(tuple, mult))
        if associativity_failure(table) is None:
            yield table


def enumerate_ordered_monoids(n: int, discrete_only: bool = False) -> Tuple[OrderedMonoid, ...]:
    """Ordered monoids with n elements up to isomorphism, in canonical-form order."""
    if n == 0:
        return ()
    posets = [antichain(n)] if discrete_only else _labelled_posets(n)
    found: Dict[Tuple[int, bytes, Table], OrderedMonoid] = {}
    for table in _monoid_tables(n):
        for carrier in posets:
            try:
                m = OrderedMonoid(carrier, table, 0)
            except InvalidMonoidError:
                continue
            found.setdefault(canonical_form(m), m)
    result = tuple(found[key] for key in sorted(found))
    logger.debug(f"Enumerated {len(result)} ordered monoids of size {n}")
    return result
