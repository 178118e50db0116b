#!/usr/bin/env python3
"""
Relational Monoids
A carrier range(n), a multiplication sending each pair to a subset and a
subset E of identities. Subsets are bitmasks; the multiplication lifts to
subsets by union.

Partial monoids have at most one product per pair; local ones satisfy
    x o@ y and v in y o z  =>  x o@ v
where x o@ y means the product x o y is nonempty.
"""

import logging
from dataclasses import asdict, dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.exceptions import CategoryError, NotFunctorialError
from core.monoids import OrderedMonoid
from core.order import iter_bits, popcount

logger = logging.getLogger(__name__)

Failure = Optional[Tuple[str, Tuple[int, ...]]]


@dataclass(frozen=True)
class RelationalMonoid:
    """
    comp[x][y] is the mask of x o y. Only the shape is checked on
    construction; the laws are reported by validate_relmon.
    """

    n: int
    comp: Tuple[Tuple[int, ...], ...]
    identities: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "comp", tuple(tuple(int(v) for v in row) for row in self.comp))
        full = (1 << self.n) - 1
        if len(self.comp) != self.n or any(len(row) != self.n for row in self.comp):
            raise CategoryError(
                f"Multiplication must be {self.n} x {self.n}", error_code="RELMON_BAD_SHAPE"
            )
        if any(v < 0 or v & ~full for row in self.comp for v in row):
            raise CategoryError(
                "Products leave the carrier", error_code="RELMON_BAD_SHAPE"
            )
        if self.identities < 0 or self.identities & ~full:
            raise CategoryError(
                "Identities leave the carrier", error_code="RELMON_BAD_SHAPE"
            )
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.n:
                raise CategoryError(
                    f"Expected {self.n} labels, got {len(self.labels)}",
                    error_code="RELMON_BAD_SHAPE",
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelationalMonoid):
            return NotImplemented
        return (self.n, self.comp, self.identities) == (other.n, other.comp, other.identities)

    def __hash__(self) -> int:
        return hash((self.n, self.comp, self.identities))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def lift(self, a: int, b: int) -> int:
        """Union of x o y over x in a and y in b."""
        out = 0
        for x in iter_bits(a):
            row = self.comp[x]
            for y in iter_bits(b):
                out |= row[y]
        return out

    def defined(self, x: int, y: int) -> bool:
        return self.comp[x][y] != 0

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @classmethod
    def from_monoid(cls, m: OrderedMonoid) -> "RelationalMonoid":
        """A plain monoid: every product is a singleton, E = {1}."""
        comp = tuple(tuple(1 << m.mult[x][y] for y in range(m.n)) for x in range(m.n))
        return cls(m.n, comp, 1 << m.unit, tuple(m.label(x) for x in range(m.n)))


@dataclass(frozen=True)
class RelmonFlags:
    associative: bool
    unital: bool
    partial: bool
    local: bool

    @property
    def is_relational_monoid(self) -> bool:
        return self.associative and self.unital

    @property
    def is_category(self) -> bool:
        """Local partial monoid, the object-free form of a small category."""
        return self.associative and self.unital and self.partial and self.local

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


def associativity_failure(m: RelationalMonoid) -> Failure:
    for x in range(m.n):
        for y in range(m.n):
            for z in range(m.n):
                if m.lift(m.comp[x][y], 1 << z) != m.lift(1 << x, m.comp[y][z]):
                    return "associative", (x, y, z)
    return None


def unit_failure(m: RelationalMonoid) -> Failure:
    for x in range(m.n):
        if m.lift(m.identities, 1 << x) != 1 << x or m.lift(1 << x, m.identities) != 1 << x:
            return "unital", (x,)
    return None


def partial_failure(m: RelationalMonoid) -> Failure:
    for x in range(m.n):
        for y in range(m.n):
            if popcount(m.comp[x][y]) > 1:
                return "partial", (x, y)
    return None


def local_failure(m: RelationalMonoid) -> Failure:
    for x in range(m.n):
        for y in range(m.n):
            if not m.defined(x, y):
                continue
            for z in range(m.n):
                for v in iter_bits(m.comp[y][z]):
                    if not m.defined(x, v):
                        return "local", (x, y, z, v)
    return None


def validate_relmon(m: RelationalMonoid) -> RelmonFlags:
    """Each law checked by enumeration over pairs and triples."""
    return RelmonFlags(
        associative=associativity_failure(m) is None,
        unital=unit_failure(m) is None,
        partial=partial_failure(m) is None,
        local=local_failure(m) is None,
    )


def powerset_partial_monoid(k: int) -> RelationalMonoid:
    """
    Subsets of a k-element set under disjoint union, undefined on
    overlapping pairs, with the empty set as identity. Element i is the
    subset with mask i.
    """
    n = 1 << k
    comp = tuple(tuple(1 << (a | b) if not a & b else 0 for b in range(n)) for a in range(n))
    labels = tuple("{" + ",".join(str(i) for i in iter_bits(a)) + "}" for a in range(n))
    return RelationalMonoid(n, comp, 1, labels)


def _nonempty_subsets(mask: int) -> List[int]:
    bits = list(iter_bits(mask))
    return [
        sum(1 << b for b, keep in zip(bits, choice) if keep)
        for choice in product((False, True), repeat=len(bits))
        if any(choice)
    ]


def enumerate_relmons(n: int) -> Iterator[RelationalMonoid]:
    """
    Every relational monoid on range(n), labelled.

    The unit laws force e o e = {e} and e o e' = {} for distinct identities,
    and e o x, x o e within {x}; each non-identity x picks the nonempty sets
    of its left and right identities. Products of non-identities are free,
    and associativity filters the candidates.
    """
    full = (1 << n) - 1
    count = 0
    for identities in range(1, full + 1):
        units = list(iter_bits(identities))
        others = [x for x in range(n) if not identities >> x & 1]
        free_cells = [(x, y) for x in others for y in others]
        side_choices = _nonempty_subsets(identities)
        for lefts in product(side_choices, repeat=len(others)):
            for rights in product(side_choices, repeat=len(others)):
                base = [[0] * n for _ in range(n)]
                for e in units:
                    base[e][e] = 1 << e
                for x, left, right in zip(others, lefts, rights):
                    for e in iter_bits(left):
                        base[e][x] = 1 << x
                    for e in iter_bits(right):
                        base[x][e] = 1 << x
                for values in product(range(full + 1), repeat=len(free_cells)):
                    for (x, y), v in zip(free_cells, values):
                        base[x][y] = v
                    m = RelationalMonoid(n, tuple(map(tuple, base)), identities)
                    if associativity_failure(m) is None:
                        count += 1
                        yield m
    logger.debug(f"Enumerated {count} relational monoids on {n} elements")


def enumerate_relational_structures(n: int) -> Iterator[RelationalMonoid]:
    """Every multiplication table and identity subset on range(n), no laws assumed."""
    full = (1 << n) - 1
    for identities in range(full + 1):
        for values in product(range(full + 1), repeat=n * n):
            comp = tuple(tuple(values[x * n : (x + 1) * n]) for x in range(n))
            yield RelationalMonoid(n, comp, identities)


@dataclass(frozen=True)
class RelmonMorphism:
    """Map of carriers, table[x] the image of x."""

    dom: RelationalMonoid
    cod: RelationalMonoid
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.dom.n or any(not 0 <= v < self.cod.n for v in self.table):
            raise CategoryError(
                "Morphism table does not map the carriers", error_code="RELMON_MORPHISM_SHAPE"
            )

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, mask: int) -> int:
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self.table[x]
        return out

    def preimage(self, mask: int) -> int:
        return sum(1 << x for x, y in enumerate(self.table) if mask >> y & 1)

    def then(self, other: "RelmonMorphism") -> "RelmonMorphism":
        """Diagrammatic composite: first self, then other."""
        return RelmonMorphism(self.dom, other.cod, tuple(other(y) for y in self.table))

    @classmethod
    def identity(cls, m: RelationalMonoid) -> "RelmonMorphism":
        return cls(m, m, tuple(range(m.n)))


def pure_failure(f: RelmonMorphism) -> Failure:
    """First (x, y) with f[x o y] != f(x) o f(y)."""
    for x in range(f.dom.n):
        for y in range(f.dom.n):
            if f.image(f.dom.comp[x][y]) != f.cod.comp[f(x)][f(y)]:
                return "pure", (x, y)
    return None


def functorial_failure(f: RelmonMorphism) -> Failure:
    failure = pure_failure(f)
    if failure is not None:
        return failure
    outside = f.image(f.dom.identities) & ~f.cod.identities
    if outside:
        return "identities", tuple(iter_bits(outside))
    return None


def is_functorial(f: RelmonMorphism) -> bool:
    return functorial_failure(f) is None


def require_functorial(f: RelmonMorphism) -> None:
    failure = functorial_failure(f)
    if failure is not None:
        raise NotFunctorialError(
            f"Morphism is not functorial: {failure[0]} fails",
            error_code="NOT_FUNCTORIAL",
            details={"condition": failure[0], "witness": list(failure[1])},
        )


def enumerate_relmon_morphisms(
    m: RelationalMonoid, k: RelationalMonoid
) -> Iterator[RelmonMorphism]:
    """Every map of carriers satisfying f[x o y] = f(x) o f(y)."""
    for table in product(range(k.n), repeat=m.n):
        f = RelmonMorphism(m, k, table)
        if pure_failure(f) is None:
            yield f


def relabel_relmon(m: RelationalMonoid, perm: Sequence[int]) -> RelationalMonoid:
    """Copy of m in which old element i is called perm[i]."""
    comp = [[0] * m.n for _ in range(m.n)]
    for x in range(m.n):
        for y in range(m.n):
            comp[perm[x]][perm[y]] = sum(1 << perm[v] for v in iter_bits(m.comp[x][y]))
    identities = sum(1 << perm[e] for e in iter_bits(m.identities))
    return RelationalMonoid(m.n, tuple(map(tuple, comp)), identities)
