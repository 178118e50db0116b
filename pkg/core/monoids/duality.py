#!/usr/bin/env python3
"""
Monoid Duality
Ordered monoids against derivation algebras on their downset lattices, and
relational monoid morphisms against corelational maps.

A relational morphism rho: M -> N is stored as an OrderRelation whose images
rho(m) are nonempty upsets of N, antitone in m. Its dual sends a downset B of
N to {m | rho(m) meets B}.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from core.exceptions import InvalidRelationalMorphismError, NotADerivationAlgebraError
from core.lattice import FiniteDistLattice, LatticeHom, LatticeMap, dualize_map
from core.order import OrderRelation, compose, iter_bits
from core.residuation import ResiduationAlgebra, classify

from .monoid import MonoidHom, OrderedMonoid

logger = logging.getLogger(__name__)


def monoid_to_derivation(m: OrderedMonoid, validate: bool = True) -> ResiduationAlgebra:
    """
    The algebra of downsets of m.

    A\\C = {b | A.b within C}, C/A = {b | b.A within C}, unit the downset of 1.
    """
    d = FiniteDistLattice(m.carrier)

    def ldiv(a: int, c: int) -> int:
        return sum(
            1 << b for b in range(m.n) if all(c >> m.mult[x][b] & 1 for x in iter_bits(a))
        )

    def rdiv(c: int, a: int) -> int:
        return sum(
            1 << b for b in range(m.n) if all(c >> m.mult[b][x] & 1 for x in iter_bits(a))
        )

    return ResiduationAlgebra(
        d,
        ldiv,
        rdiv,
        unit=m.carrier.down[m.unit],
        prime_product=lambda p, q: m.carrier.down[m.mult[p][q]],
        validate=validate,
    )


def derivation_to_monoid(r: ResiduationAlgebra) -> OrderedMonoid:
    """Join-primes of r under mu, with the prime unit."""
    flags = classify(r)
    if not flags.derivation:
        raise NotADerivationAlgebraError(
            "Only derivation algebras dualize to monoids",
            error_code="NOT_A_DERIVATION_ALGEBRA",
            details=flags.to_dict(),
        )
    d = r.lattice
    n = d.base.n
    mult = tuple(tuple(d.prime_of(r.mu_prime(p, q)) for q in range(n)) for p in range(n))
    return OrderedMonoid(d.base, mult, d.prime_of(r.unit))


def dualize_monoid_hom(f: MonoidHom) -> LatticeHom:
    """B -> f^-1[B] from the downsets of the codomain to those of the domain."""
    return dualize_map(f.as_monotone_map())


@dataclass(frozen=True)
class RelationalMonoidMorphism:
    """Stable relation between monoid carriers, images upward closed."""

    dom: OrderedMonoid
    cod: OrderedMonoid
    relation: OrderRelation

    def __post_init__(self):
        if self.relation.dom != self.dom.carrier or self.relation.cod != self.cod.carrier:
            raise InvalidRelationalMorphismError(
                "Relation does not run between the monoid carriers",
                error_code="RELATIONAL_CARRIER_MISMATCH",
            )

    @classmethod
    def from_images(
        cls, dom: OrderedMonoid, cod: OrderedMonoid, images: Tuple[int, ...]
    ) -> "RelationalMonoidMorphism":
        return cls(dom, cod, OrderRelation(dom.carrier, cod.carrier, images))

    def __call__(self, x: int) -> int:
        return self.relation.images[x]


def relational_failure(rho: RelationalMonoidMorphism) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """First violated condition among totality, the lax square and the lax unit."""
    m, k = rho.dom, rho.cod
    for x in range(m.n):
        if not rho(x):
            return "total", (x,)
    for x in range(m.n):
        for y in range(m.n):
            products = k.multiply_sets(rho(x), rho(y))
            missing = products & ~rho(m(x, y))
            if missing:
                return "lax_square", (x, y, next(iter_bits(missing)))
    if not rho(m.unit) >> k.unit & 1:
        return "lax_unit", (m.unit,)
    return None


def check_relational_morphism(rho: RelationalMonoidMorphism) -> bool:
    return relational_failure(rho) is None


def dualize_relational_morphism(
    rho: RelationalMonoidMorphism, strict: bool = True
) -> LatticeMap:
    """
    B -> {m | rho(m) meets B}, from the downsets of the codomain to those of
    the domain. With strict=False the relation is not checked first.
    """
    if strict:
        failure = relational_failure(rho)
        if failure is not None:
            raise InvalidRelationalMorphismError(
                f"Not a relational morphism: {failure[0]} fails",
                error_code="RELATIONAL_MORPHISM_INVALID",
                details={"condition": failure[0], "witness": list(failure[1])},
            )
    dom = FiniteDistLattice(rho.cod.carrier)
    cod = FiniteDistLattice(rho.dom.carrier)
    images = rho.relation.images
    return LatticeMap.from_function(
        dom, cod, lambda b: sum(1 << x for x, image in enumerate(images) if image & b)
    )


def relational_graph(f: MonoidHom) -> RelationalMonoidMorphism:
    """m -> the upset of f(m)."""
    up = f.cod.carrier.up
    return RelationalMonoidMorphism.from_images(f.dom, f.cod, tuple(up[y] for y in f.table))


def inverse_relation(f: MonoidHom) -> RelationalMonoidMorphism:
    """Inverse image of a surjective hom f: N -> M, as a relational morphism M -> N."""
    images = [0] * f.cod.n
    for y, x in enumerate(f.table):
        images[x] |= 1 << y
    carrier = f.dom.carrier
    closed = tuple(carrier.upset_mask(mask) for mask in images)
    # antitone closure: smaller elements inherit the images of larger ones
    stable = tuple(
        _union(closed[z] for z in iter_bits(f.cod.carrier.up[x])) for x in range(f.cod.n)
    )
    return RelationalMonoidMorphism.from_images(f.cod, f.dom, stable)


def _union(masks) -> int:
    out = 0
    for mask in masks:
        out |= mask
    return out


def identity_relational(m: OrderedMonoid) -> RelationalMonoidMorphism:
    return RelationalMonoidMorphism.from_images(m, m, m.carrier.up)


def compose_relational_morphisms(
    rho: RelationalMonoidMorphism, sigma: RelationalMonoidMorphism
) -> RelationalMonoidMorphism:
    """Kleisli composite: first rho, then sigma."""
    return RelationalMonoidMorphism(rho.dom, sigma.cod, compose(rho.relation, sigma.relation))
