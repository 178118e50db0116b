#!/usr/bin/env python3
"""
Finite Categories
Explicit composition tables, functors, and the passage between small
categories and local partial monoids.

Composition is diagrammatic: table[f][g] is "first f, then g", defined when
cod(f) = dom(g).
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from typing import Dict, Iterator, List, NoReturn, Optional, Sequence, Tuple

from core.exceptions import (
    ClassificationMismatchError,
    InvalidCategoryError,
    NotLocalPartialError,
)
from core.monoids import OrderedMonoid
from core.order import iter_bits

from .relmon import RelationalMonoid, RelmonMorphism, is_functorial, validate_relmon

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[Optional[int], ...], ...]


@dataclass(frozen=True)
class FiniteCategory:
    """
    Category on objects range(len(objects)) and morphisms range(len(morphisms)).

    The main attributes are:
        - dom, cod: per morphism
        - identities: identities[o] is the identity morphism of object o
        - table: composites, None exactly on non-composable pairs
    """

    objects: Tuple[str, ...]
    morphisms: Tuple[str, ...]
    dom: Tuple[int, ...]
    cod: Tuple[int, ...]
    identities: Tuple[int, ...]
    table: Table

    def __post_init__(self):
        for name in ("objects", "morphisms", "dom", "cod", "identities"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(
            self,
            "table",
            tuple(tuple(None if v is None else int(v) for v in row) for row in self.table),
        )
        self._check_shape()
        self._check_composites()

    def _fail(self, message: str, code: str, witness: Sequence[int] = ()) -> NoReturn:
        raise InvalidCategoryError(message, error_code=code, details={"witness": list(witness)})

    def _check_shape(self) -> None:
        k, n = len(self.objects), len(self.morphisms)
        if len(self.dom) != n or len(self.cod) != n or len(self.identities) != k:
            self._fail("Morphism and identity lists have mismatched lengths", "CATEGORY_BAD_SHAPE")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            self._fail(f"Composition table must be {n} x {n}", "CATEGORY_BAD_SHAPE")
        for f in range(n):
            if not (0 <= self.dom[f] < k and 0 <= self.cod[f] < k):
                self._fail(f"Morphism {f} has an unknown endpoint", "CATEGORY_BAD_SHAPE", (f,))
        if len(set(self.identities)) != k:
            self._fail("Objects share an identity", "CATEGORY_IDENTITY")
        for o, e in enumerate(self.identities):
            if not 0 <= e < n or self.dom[e] != o or self.cod[e] != o:
                self._fail(
                    f"Identity of object {o} is not an endomorphism", "CATEGORY_IDENTITY", (o,)
                )

    def _check_composites(self) -> None:
        n = len(self.morphisms)
        for f in range(n):
            for g in range(n):
                h = self.table[f][g]
                if (h is not None) != (self.cod[f] == self.dom[g]):
                    self._fail(
                        f"Composite of {f} and {g} is defined off the matching endpoints",
                        "CATEGORY_COMPOSABILITY",
                        (f, g),
                    )
                if h is None:
                    continue
                if not 0 <= h < n or self.dom[h] != self.dom[f] or self.cod[h] != self.cod[g]:
                    self._fail(
                        f"Composite of {f} and {g} has the wrong endpoints",
                        "CATEGORY_DOM_COD",
                        (f, g),
                    )
        for f in range(n):
            if (
                self.table[self.identities[self.dom[f]]][f] != f
                or self.table[f][self.identities[self.cod[f]]] != f
            ):
                self._fail(f"Identity laws fail at {f}", "CATEGORY_IDENTITY", (f,))
        for f, g, h in product(range(n), repeat=3):
            fg, gh = self.table[f][g], self.table[g][h]
            if fg is None or gh is None:
                continue
            if self.table[fg][h] != self.table[f][gh]:
                self._fail("Composition is not associative", "CATEGORY_NOT_ASSOCIATIVE", (f, g, h))

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def composable(self, f: int, g: int) -> bool:
        return self.cod[f] == self.dom[g]

    def compose(self, f: int, g: int) -> int:
        h = self.table[f][g]
        if h is None:
            self._fail(
                f"Morphisms {f} and {g} are not composable", "CATEGORY_COMPOSABILITY", (f, g)
            )
        return h

    def hom(self, a: int, b: int) -> Tuple[int, ...]:
        return tuple(f for f in range(self.n_morphisms) if self.dom[f] == a and self.cod[f] == b)

    def is_identity(self, f: int) -> bool:
        return f in self.identities


def build_category(
    objects: Sequence[str],
    arrows: Sequence[Tuple[str, int, int]],
    composites: Dict[Tuple[int, int], int],
    identities: Sequence[int],
) -> FiniteCategory:
    """Category from (name, dom, cod) arrows; composites with identities are filled in."""
    n = len(arrows)
    dom = tuple(a[1] for a in arrows)
    cod = tuple(a[2] for a in arrows)
    ids = set(identities)
    table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
    for f in range(n):
        for g in range(n):
            if cod[f] != dom[g]:
                continue
            if (f, g) in composites:
                table[f][g] = composites[(f, g)]
            elif f in ids:
                table[f][g] = g
            elif g in ids:
                table[f][g] = f
            else:
                raise InvalidCategoryError(
                    f"Missing composite of {arrows[f][0]} and {arrows[g][0]}",
                    error_code="CATEGORY_COMPOSABILITY",
                    details={"witness": [f, g]},
                )
    return FiniteCategory(
        tuple(objects),
        tuple(a[0] for a in arrows),
        dom,
        cod,
        tuple(identities),
        tuple(map(tuple, table)),
    )


def discrete_category(k: int) -> FiniteCategory:
    objects = tuple(f"X{o}" for o in range(k))
    arrows = [(f"1_{name}", o, o) for o, name in enumerate(objects)]
    return build_category(objects, arrows, {}, range(k))


def terminal_category() -> FiniteCategory:
    return discrete_category(1)


def arrow_category() -> FiniteCategory:
    """Two objects and one arrow between them."""
    return build_category(("X0", "X1"), [("1_X0", 0, 0), ("1_X1", 1, 1), ("f", 0, 1)], {}, (0, 1))


def monoid_category(m: OrderedMonoid) -> FiniteCategory:
    """One-object category of a plain monoid."""
    table = tuple(tuple(m.mult[x][y] for y in range(m.n)) for x in range(m.n))
    return FiniteCategory(
        ("*",),
        tuple(m.label(x) for x in range(m.n)),
        (0,) * m.n,
        (0,) * m.n,
        (m.unit,),
        table,
    )


def category_to_relmon(c: FiniteCategory) -> RelationalMonoid:
    """Morphisms with f o g = {f;g} when composable, identities as E."""
    comp = tuple(
        tuple(0 if h is None else 1 << h for h in row) for row in c.table
    )
    identities = sum(1 << e for e in c.identities)
    return RelationalMonoid(c.n_morphisms, comp, identities, c.morphisms)


def relmon_to_category(m: RelationalMonoid) -> FiniteCategory:
    """
    Objects are the identities, ordered by index; f runs from its unique left
    identity to its unique right identity.
    """
    flags = validate_relmon(m)
    if not flags.is_category:
        raise NotLocalPartialError(
            "Only local partial monoids are categories",
            error_code="RELMON_NOT_LOCAL_PARTIAL",
            details=flags.to_dict(),
        )
    units = list(iter_bits(m.identities))
    dom, cod = [], []
    for f in range(m.n):
        left = [i for i, e in enumerate(units) if m.defined(e, f)]
        right = [i for i, e in enumerate(units) if m.defined(f, e)]
        if len(left) != 1 or len(right) != 1:
            raise NotLocalPartialError(
                f"Element {f} lacks unique identities on both sides",
                error_code="RELMON_UNITS_NOT_UNIQUE",
                details={"witness": [f]},
            )
        dom.append(left[0])
        cod.append(right[0])
    table = tuple(
        tuple(next(iter_bits(m.comp[f][g])) if m.comp[f][g] else None for g in range(m.n))
        for f in range(m.n)
    )
    return FiniteCategory(
        tuple(m.label(e) for e in units),
        tuple(m.label(f) for f in range(m.n)),
        tuple(dom),
        tuple(cod),
        tuple(units),
        table,
    )


# Functors


def functor_failure(
    c: FiniteCategory, c2: FiniteCategory, mapping: Sequence[int]
) -> Optional[Tuple[int, ...]]:
    """First identity or composable pair the morphism map does not respect."""
    if len(mapping) != c.n_morphisms or any(not 0 <= v < c2.n_morphisms for v in mapping):
        raise InvalidCategoryError(
            "Functor table does not map the morphisms", error_code="FUNCTOR_BAD_SHAPE"
        )
    for e in c.identities:
        if not c2.is_identity(mapping[e]):
            return (e,)
    for f in range(c.n_morphisms):
        for g in range(c.n_morphisms):
            h = c.table[f][g]
            if h is None:
                continue
            if c2.table[mapping[f]][mapping[g]] != mapping[h]:
                return f, g
    return None


def is_functor(c: FiniteCategory, c2: FiniteCategory, mapping: Sequence[int]) -> bool:
    return functor_failure(c, c2, mapping) is None


def reflects_composability(c: FiniteCategory, c2: FiniteCategory, mapping: Sequence[int]) -> bool:
    return all(
        c.composable(f, g)
        for f in range(c.n_morphisms)
        for g in range(c.n_morphisms)
        if c2.composable(mapping[f], mapping[g])
    )


def enumerate_functors(c: FiniteCategory, c2: FiniteCategory) -> Iterator[Tuple[int, ...]]:
    for mapping in product(range(c2.n_morphisms), repeat=c.n_morphisms):
        if is_functor(c, c2, mapping):
            yield mapping


def functor_as_morphism(
    c: FiniteCategory, c2: FiniteCategory, mapping: Sequence[int]
) -> RelmonMorphism:
    return RelmonMorphism(category_to_relmon(c), category_to_relmon(c2), tuple(mapping))


def check_functor_correspondence(
    c: FiniteCategory, c2: FiniteCategory, mapping: Sequence[int]
) -> bool:
    """Functorial as relational monoids iff a functor reflecting composability."""
    as_relmon = is_functorial(functor_as_morphism(c, c2, mapping))
    as_functor = is_functor(c, c2, mapping) and reflects_composability(c, c2, mapping)
    if as_relmon != as_functor:
        raise ClassificationMismatchError(
            "Functorial morphism and composability-reflecting functor disagree",
            error_code="FUNCTOR_CORRESPONDENCE_MISMATCH",
            details={"mapping": list(mapping), "relmon": as_relmon, "functor": as_functor},
        )
    return as_relmon


# Isomorphism and enumeration


def _relabel(c: FiniteCategory, perm: Sequence[int]) -> FiniteCategory:
    """Copy of c in which morphism f is called perm[f]; objects follow their identities."""
    n = c.n_morphisms
    inverse = [0] * n
    for old, new in enumerate(perm):
        inverse[new] = old
    object_order = sorted(range(c.n_objects), key=lambda o: perm[c.identities[o]])
    object_rank = {o: i for i, o in enumerate(object_order)}

    def moved(v):
        return None if v is None else perm[v]

    table = tuple(
        tuple(moved(c.table[inverse[f]][inverse[g]]) for g in range(n)) for f in range(n)
    )
    return FiniteCategory(
        tuple(c.objects[o] for o in object_order),
        tuple(c.morphisms[inverse[f]] for f in range(n)),
        tuple(object_rank[c.dom[inverse[f]]] for f in range(n)),
        tuple(object_rank[c.cod[inverse[f]]] for f in range(n)),
        tuple(perm[c.identities[o]] for o in object_order),
        table,
    )


def category_key(c: FiniteCategory) -> Tuple:
    table = tuple(tuple(-1 if v is None else v for v in row) for row in c.table)
    return c.identities, c.dom, c.cod, table


def canonical_category(c: FiniteCategory) -> Tuple:
    """Least key over all relabellings of the morphisms."""
    return min(category_key(_relabel(c, perm)) for perm in permutations(range(c.n_morphisms)))


def categories_isomorphic(c1: FiniteCategory, c2: FiniteCategory) -> bool:
    return (
        c1.n_objects == c2.n_objects
        and c1.n_morphisms == c2.n_morphisms
        and canonical_category(c1) == canonical_category(c2)
    )


def _composition_tables(n: int, k: int, dom: Sequence[int], cod: Sequence[int]) -> Iterator[Table]:
    """Associative composition tables with identities 0..k-1, by backtracking."""
    table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
    for f in range(n):
        for g in range(n):
            if cod[f] == dom[g]:
                if f < k:
                    table[f][g] = g
                elif g < k:
                    table[f][g] = f
    cells = [(f, g) for f in range(n) for g in range(n) if cod[f] == dom[g] and table[f][g] is None]
    options = {
        (f, g): [h for h in range(n) if dom[h] == dom[f] and cod[h] == cod[g]] for f, g in cells
    }
    triples = [
        (f, g, h)
        for f in range(n)
        for g in range(n)
        for h in range(n)
        if cod[f] == dom[g] and cod[g] == dom[h]
    ]

    def consistent() -> bool:
        for f, g, h in triples:
            fg, gh = table[f][g], table[g][h]
            if fg is None or gh is None:
                continue
            left, right = table[fg][h], table[f][gh]
            if left is not None and right is not None and left != right:
                return False
        return True

    def fill(i: int) -> Iterator[Table]:
        if i == len(cells):
            yield tuple(map(tuple, table))
            return
        f, g = cells[i]
        for h in options[(f, g)]:
            table[f][g] = h
            if consistent():
                yield from fill(i + 1)
        table[f][g] = None

    yield from fill(0)


def enumerate_categories(
    max_objects: int = 2, max_morphisms: int = 4
) -> Tuple[FiniteCategory, ...]:
    """Categories with 1..max_objects objects and at most max_morphisms morphisms, up to iso."""
    found: Dict[Tuple, FiniteCategory] = {}
    for k in range(1, max_objects + 1):
        objects = tuple(f"X{o}" for o in range(k))
        hom_sets = [(a, b) for a in range(k) for b in range(k)]
        for extra in range(0, max_morphisms - k + 1):
            for ends in combinations_with_replacement(hom_sets, extra):
                dom = tuple(range(k)) + tuple(a for a, _ in ends)
                cod = tuple(range(k)) + tuple(b for _, b in ends)
                names = tuple(f"1_X{o}" for o in range(k)) + tuple(f"f{i}" for i in range(extra))
                for table in _composition_tables(k + extra, k, dom, cod):
                    c = FiniteCategory(objects, names, dom, cod, tuple(range(k)), table)
                    found.setdefault(canonical_category(c), c)
    result = tuple(found[key] for key in sorted(found))
    logger.debug(
        f"Enumerated {len(result)} categories with at most {max_objects} objects "
        f"and {max_morphisms} morphisms"
    )
    return result
