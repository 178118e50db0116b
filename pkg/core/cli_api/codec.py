#!/usr/bin/env python3
"""
Structure Codec
Builds library objects from validated structure files and encodes results as
plain JSON values. Sets are emitted as ascending index lists.
"""

import logging
from functools import singledispatch
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from core.catdual import FiniteCategory, RelationalMonoid, build_category
from core.exceptions import SchemaError
from core.lattice import AbstractLattice, FiniteDistLattice, LatticeMap
from core.monoids import MonoidHom, OrderedMonoid, RelationalMonoidMorphism
from core.operators import DualRelation, Operator
from core.order import MonotoneMap, Poset, is_subset, mask_of, members, popcount
from core.reglang import DFA, SyntacticMonoid, compile_regex
from core.residuation import ResiduationAlgebra, from_multiplication

from .schema import (
    AbstractLatticeSpec,
    CategorySpec,
    DFASpec,
    LatticeHomSpec,
    LatticeSpec,
    MonoidHomSpec,
    MonoidSpec,
    MonotoneMapSpec,
    OperatorSpec,
    PosetSpec,
    RegexSpec,
    RelationalMorphismSpec,
    RelationSpec,
    RelmonSpec,
    ResiduationAlgebraSpec,
)

logger = logging.getLogger(__name__)


# Building


@singledispatch
def build(spec: BaseModel) -> Any:
    """Library object described by a structure file; laws are checked here."""
    raise SchemaError(f"No builder for {type(spec).__name__}", error_code="SCHEMA_UNKNOWN_KIND")


@build.register
def _(spec: PosetSpec) -> Poset:
    return Poset.from_pairs(spec.n, spec.leq, spec.labels)


@build.register
def _(spec: LatticeSpec) -> FiniteDistLattice:
    return FiniteDistLattice(build(spec.base))


@build.register
def _(spec: AbstractLatticeSpec) -> AbstractLattice:
    return AbstractLattice.from_pairs(spec.n, spec.leq)


@build.register
def _(spec: OperatorSpec) -> Operator:
    d = FiniteDistLattice(build(spec.base))
    shape = Operator(d, spec.k, spec.n, (0,) * (spec.base.n**spec.k))
    inputs = shape.domain.product
    outputs = shape.codomain.product
    table = [0] * inputs.n
    for entry in spec.table:
        generators = mask_of(outputs.index_of(t) for t in entry.output)
        table[inputs.index_of(entry.input)] = outputs.downset_mask(generators)
    return Operator(d, spec.k, spec.n, tuple(table))


@build.register
def _(spec: RelationSpec) -> DualRelation:
    pairs = frozenset((tuple(a), tuple(b)) for a, b in spec.pairs)
    return DualRelation(build(spec.base), spec.k, spec.n, pairs)


@build.register
def _(spec: MonoidSpec) -> OrderedMonoid:
    carrier = Poset.from_pairs(spec.n, spec.leq, spec.labels)
    return OrderedMonoid(carrier, tuple(tuple(row) for row in spec.mult), spec.unit)


@build.register
def _(spec: MonoidHomSpec) -> MonoidHom:
    return MonoidHom(build(spec.dom), build(spec.cod), tuple(spec.table))


@build.register
def _(spec: RelationalMorphismSpec) -> RelationalMonoidMorphism:
    dom, cod = build(spec.dom), build(spec.cod)
    images = tuple(cod.carrier.upset_mask(mask_of(image)) for image in spec.images)
    return RelationalMonoidMorphism.from_images(dom, cod, images)


@build.register
def _(spec: MonotoneMapSpec) -> MonotoneMap:
    return MonotoneMap(build(spec.dom), build(spec.cod), tuple(spec.table))


@build.register
def _(spec: LatticeHomSpec) -> LatticeMap:
    dom = FiniteDistLattice(build(spec.dom))
    cod = FiniteDistLattice(build(spec.cod))
    values = tuple(cod.base.downset_mask(mask_of(image)) for image in spec.primes)
    return LatticeMap.from_prime_values(dom, cod, values).as_hom()


@build.register
def _(spec: DFASpec) -> DFA:
    return DFA(
        tuple(spec.alphabet),
        tuple(tuple(row) for row in spec.delta),
        spec.initial,
        frozenset(spec.accepting),
    )


@build.register
def _(spec: RegexSpec) -> DFA:
    return compile_regex(spec.pattern, spec.alphabet)


@build.register
def _(spec: CategorySpec) -> FiniteCategory:
    objects = {name: i for i, name in enumerate(spec.objects)}
    arrows = [(m.id, objects[m.dom], objects[m.cod]) for m in spec.morphisms]
    index = {m.id: i for i, m in enumerate(spec.morphisms)}
    composites = {(index[f], index[g]): index[h] for f, g, h in spec.compose}
    identities = [index[name] for name in spec.identities]
    return build_category(spec.objects, arrows, composites, identities)


@build.register
def _(spec: RelmonSpec) -> RelationalMonoid:
    comp = tuple(tuple(mask_of(cell) for cell in row) for row in spec.comp)
    labels = tuple(spec.labels) if spec.labels is not None else None
    return RelationalMonoid(spec.n, comp, mask_of(spec.identities), labels)


@build.register
def _(spec: ResiduationAlgebraSpec) -> ResiduationAlgebra:
    d = FiniteDistLattice(build(spec.base))
    table = tuple(d.base.downset_mask(mask_of(value)) for value in spec.mu)
    unit = d.base.downset_mask(mask_of(spec.unit)) if spec.unit is not None else None
    return from_multiplication(d, table, unit=unit)


# Encoding
#
# Encoders of kinds that have a structure file produce a document the schema
# accepts, so a dual can be fed back to the CLI.


def encode_set(mask: int) -> List[int]:
    return list(members(mask))


def _covers(p: Poset) -> List[List[int]]:
    return [[i, j] for i in range(p.n) for j in range(p.n) if p.covers(i, j)]


def encode_poset(p: Poset) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": "poset", "n": p.n, "leq": _covers(p)}
    if p.labels is not None:
        out["labels"] = list(p.labels)
    return out


def encode_lattice(d: FiniteDistLattice) -> Dict[str, Any]:
    """Elements as downsets of join-primes, plus the lattice as an abstract structure."""
    elements = d.elements
    covers = [
        [i, j]
        for i, x in enumerate(elements)
        for j, y in enumerate(elements)
        if is_subset(x, y) and popcount(y) == popcount(x) + 1
    ]
    return {
        "size": d.size,
        "elements": [encode_set(x) for x in elements],
        "join_primes": [elements.index(p) for p in d.primes],
        "structure": {"kind": "abstract-lattice", "n": d.size, "leq": covers},
    }


def encode_operator(op: Operator) -> Dict[str, Any]:
    inputs = op.domain.product
    outputs = op.codomain.product
    return {
        "kind": "operator",
        "base": encode_poset(op.lattice.base),
        "k": op.k,
        "n": op.n,
        "table": [
            {
                "input": list(inputs.tuple_of(i)),
                "output": [list(outputs.tuple_of(j)) for j in outputs.maximal(value)],
            }
            for i, value in enumerate(op.table)
        ],
    }


def encode_relation(r: DualRelation) -> Dict[str, Any]:
    return {
        "kind": "relation",
        "base": encode_poset(r.poset),
        "k": r.k,
        "n": r.n,
        "pairs": [[list(a), list(b)] for a, b in r.sorted_pairs()],
    }


def encode_monoid(m: OrderedMonoid) -> Dict[str, Any]:
    return {
        "kind": "monoid",
        "n": m.n,
        "mult": [list(row) for row in m.mult],
        "unit": m.unit,
        "leq": _covers(m.carrier),
        "labels": [m.label(x) for x in range(m.n)],
    }


def encode_lattice_map(f: LatticeMap) -> Dict[str, Any]:
    """Element table; lattice homs also as a lattice-hom structure."""
    out: Dict[str, Any] = {
        "dom_elements": [encode_set(x) for x in f.dom.elements],
        "table": [encode_set(v) for v in f.table],
    }
    if f.is_homomorphism():
        out["structure"] = {
            "kind": "lattice-hom",
            "dom": encode_poset(f.dom.base),
            "cod": encode_poset(f.cod.base),
            "primes": [list(f.cod.base.maximal(f(p))) for p in f.dom.primes],
        }
    return out


def encode_monotone_map(f: MonotoneMap) -> Dict[str, Any]:
    return {
        "kind": "monotone-map",
        "dom": encode_poset(f.dom),
        "cod": encode_poset(f.cod),
        "table": list(f.table),
    }


def encode_residuation(r: ResiduationAlgebra) -> Dict[str, Any]:
    """Residual tables over the element order, plus the prime-pair table of mu."""
    d = r.lattice
    base = d.base
    lres, rres = r.tables()
    unit: Optional[List[int]] = list(base.maximal(r.unit)) if r.unit is not None else None
    return {
        "lattice": encode_lattice(d),
        "ldiv": [[encode_set(v) for v in row] for row in lres],
        "rdiv": [[encode_set(v) for v in row] for row in rres],
        "structure": {
            "kind": "residuation-algebra",
            "base": encode_poset(base),
            "mu": [
                list(base.maximal(r.mu_prime(p, q))) for p in range(base.n) for q in range(base.n)
            ],
            "unit": unit,
        },
    }


def encode_dfa(d: DFA) -> Dict[str, Any]:
    return {
        "kind": "dfa",
        "states": d.n_states,
        "alphabet": list(d.alphabet),
        "delta": [list(row) for row in d.transitions],
        "initial": d.initial,
        "accepting": sorted(d.accepting),
    }


def encode_syntactic(s: SyntacticMonoid) -> Dict[str, Any]:
    return {
        "size": s.n,
        "alphabet": list(s.dfa.alphabet),
        "elements": [
            {"index": x, "witness": s.label(x), "accepted": bool(s.image_of_language >> x & 1)}
            for x in range(s.n)
        ],
        "letters": dict(s.letters),
        "mult": [list(row) for row in s.mult],
        "minimal_dfa": encode_dfa(s.dfa),
    }


def encode_category(c: FiniteCategory) -> Dict[str, Any]:
    names = c.morphisms
    return {
        "kind": "category",
        "objects": list(c.objects),
        "morphisms": [
            {"id": names[f], "dom": c.objects[c.dom[f]], "cod": c.objects[c.cod[f]]}
            for f in range(c.n_morphisms)
        ],
        "compose": [
            [names[f], names[g], names[h]]
            for f, row in enumerate(c.table)
            for g, h in enumerate(row)
            if h is not None
        ],
        "identities": [names[e] for e in c.identities],
    }


def encode_relmon(m: RelationalMonoid) -> Dict[str, Any]:
    return {
        "kind": "relmon",
        "n": m.n,
        "comp": [[encode_set(v) for v in row] for row in m.comp],
        "E": encode_set(m.identities),
        "labels": [m.label(x) for x in range(m.n)],
    }
