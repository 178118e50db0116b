#!/usr/bin/env python3
"""
Operator Duality
Dual relations of join-operators, classification and the dual of composites.

A (k, n)-operator dualizes to a relation between prime n-tuples a and prime
k-tuples b: a relates to b iff a lies in the table entry of b.
"""

import logging
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Optional, Tuple

from core.exceptions import ClassificationMismatchError, DualityCheckError, OperatorError
from core.lattice import FiniteDistLattice, LatticeHom, dualize_hom
from core.order import MonotoneMap, OrderRelation, Poset, ProductPoset, iter_bits
from core.order import compose as kleisli_compose
from core.order import identity as kleisli_identity
from core.order import tensor as kleisli_tensor

from .operator import Operator, compose_operators, identity_operator, tensor_operators

logger = logging.getLogger(__name__)

PrimeTuple = Tuple[int, ...]


@dataclass(frozen=True)
class DualRelation:
    """Stable relation between prime n-tuples (first) and prime k-tuples (second)."""

    poset: Poset
    k: int
    n: int
    pairs: FrozenSet[Tuple[PrimeTuple, PrimeTuple]]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", frozenset((tuple(a), tuple(b)) for a, b in self.pairs)
        )
        # builds and validates the stable relation
        _ = self.relation

    @cached_property
    def outputs(self) -> ProductPoset:
        return ProductPoset([self.poset] * self.n)

    @cached_property
    def inputs(self) -> ProductPoset:
        return ProductPoset([self.poset] * self.k)

    @cached_property
    def relation(self) -> OrderRelation:
        return OrderRelation.from_pairs(
            self.outputs,
            self.inputs,
            ((self.outputs.index_of(a), self.inputs.index_of(b)) for a, b in self.pairs),
        )

    @classmethod
    def from_relation(cls, poset: Poset, k: int, n: int, r: OrderRelation) -> "DualRelation":
        outputs = ProductPoset([poset] * n)
        inputs = ProductPoset([poset] * k)
        return cls(
            poset,
            k,
            n,
            frozenset(
                (outputs.tuple_of(a), inputs.tuple_of(b))
                for a in range(r.dom.n)
                for b in iter_bits(r.images[a])
            ),
        )

    def related(self, a: PrimeTuple, b: PrimeTuple) -> bool:
        return (tuple(a), tuple(b)) in self.pairs

    def sorted_pairs(self) -> Tuple[Tuple[PrimeTuple, PrimeTuple], ...]:
        return tuple(sorted(self.pairs))


def dualize_operator(op: Operator) -> DualRelation:
    """(a, b) is related iff a lies in table(b)."""
    return DualRelation.from_relation(op.lattice.base, op.k, op.n, operator_relation(op))


def operator_relation(op: Operator) -> OrderRelation:
    """The dual relation as images over the n-th power: r(a) = {b | a in table(b)}."""
    outputs = op.codomain.product
    inputs = op.domain.product
    images = [0] * outputs.n
    for b, value in enumerate(op.table):
        for a in iter_bits(value):
            images[a] |= 1 << b
    return OrderRelation(outputs, inputs, tuple(images))


def dualize_relation(r: DualRelation) -> Operator:
    """table(b) = {a | (a, b) related}; the inverse of dualize_operator."""
    relation = r.relation
    table = [0] * relation.cod.n
    for a, image in enumerate(relation.images):
        for b in iter_bits(image):
            table[b] |= 1 << a
    return Operator(FiniteDistLattice(r.poset), r.k, r.n, tuple(table))


@dataclass(frozen=True)
class OperatorFlags:
    """Classification of an operator, agreed on by both sides of the duality."""

    pure: bool
    meet_preserving: bool
    top_preserving: bool

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


def _operator_side(op: Operator) -> OperatorFlags:
    f = op.as_map()
    top = f.preserves_top()
    meets = f.preserves_meets()
    pure = f.is_homomorphism()
    return OperatorFlags(pure=pure, meet_preserving=meets, top_preserving=top)


def _relation_side(r: OrderRelation) -> OperatorFlags:
    total = all(r.images)
    # every nonempty image is a principal upset
    partial = all(not image or len(r.cod.minimal(image)) == 1 for image in r.images)
    return OperatorFlags(pure=total and partial, meet_preserving=partial, top_preserving=total)


def classify(op: Operator) -> OperatorFlags:
    """
    Classify op on the operator side and on its dual relation.

    meet_preserving (non-empty meets) matches a partial-function relation,
    top_preserving a total relation, pure a total function.
    """
    lhs = _operator_side(op)
    rhs = _relation_side(operator_relation(op))
    if lhs != rhs:
        diff = {
            name: {"operator": value, "relation": rhs.to_dict()[name]}
            for name, value in lhs.to_dict().items()
            if value != rhs.to_dict()[name]
        }
        raise ClassificationMismatchError(
            "Operator and relation classifications disagree",
            error_code="OPERATOR_CLASSIFICATION_MISMATCH",
            details={"flags": diff, "table": list(op.table)},
        )
    logger.debug(f"Classified ({op.k},{op.n})-operator: {lhs}")
    return lhs


def _first_difference(r: OrderRelation, s: OrderRelation) -> Optional[Tuple[int, int]]:
    for a, (x, y) in enumerate(zip(r.images, s.images)):
        diff = x ^ y
        if diff:
            return a, next(iter_bits(diff))
    return None


def _assert_same(name: str, direct: OrderRelation, composed: OrderRelation) -> None:
    witness = _first_difference(direct, composed)
    if witness is not None or direct.dom != composed.dom or direct.cod != composed.cod:
        raise DualityCheckError(
            f"Dual of {name} differs from the relational construction",
            error_code="DUAL_COMPOSITE_MISMATCH",
            details={"witness": list(witness) if witness else []},
        )


def dual_compose(h: Operator, g: Operator) -> Tuple[OrderRelation, OrderRelation]:
    """Dual of g after h against the Kleisli composite of the duals (g's first)."""
    direct = operator_relation(compose_operators(h, g))
    composed = kleisli_compose(operator_relation(g), operator_relation(h))
    _assert_same("composite", direct, composed)
    return direct, composed


def dual_tensor(h: Operator, g: Operator) -> Tuple[OrderRelation, OrderRelation]:
    """Dual of h (x) g against the product of the dual relations."""
    direct = operator_relation(tensor_operators(h, g))
    composed = kleisli_tensor(operator_relation(h), operator_relation(g))
    _assert_same("tensor", direct, composed)
    return direct, composed


def dual_identity(d: FiniteDistLattice) -> Tuple[OrderRelation, OrderRelation]:
    """Dual of the identity operator against the unit relation {(a, b) | a <= b}."""
    direct = operator_relation(identity_operator(d))
    unit = kleisli_identity(d.base)
    if direct.images != unit.images:
        raise DualityCheckError(
            "Dual of the identity operator is not the unit relation",
            error_code="DUAL_IDENTITY_MISMATCH",
            details={"witness": list(_first_difference(direct, unit) or ())},
        )
    return direct, unit


def is_operator_morphism(f: LatticeHom, a: Operator, b: Operator) -> bool:
    """f commutes with the unary operators: f(a(x)) = b(f(x))."""
    _require_unary(a, b)
    return all(f(a(x)) == b(f(x)) for x in f.dom.elements)


def is_relation_morphism(phi: MonotoneMap, ra: OrderRelation, rb: OrderRelation) -> bool:
    """
    Relational side of the morphism condition for phi: J(E) -> J(D).

    For all p in J(D), q in J(E): phi(q) ra p iff some q' with phi(q') <= p
    has q rb q'.
    """
    for p in range(phi.cod.n):
        below = phi.preimage(phi.cod.down[p])
        for q in range(phi.dom.n):
            lhs = ra.related(phi(q), p)
            rhs = bool(rb.images[q] & below)
            if lhs != rhs:
                return False
    return True


def check_hom_duality(f: LatticeHom, a: Operator, b: Operator) -> bool:
    """Both sides of the morphism duality; disagreement is a hard failure."""
    lhs = is_operator_morphism(f, a, b)
    rhs = is_relation_morphism(dualize_hom(f), operator_relation(a), operator_relation(b))
    if lhs != rhs:
        raise DualityCheckError(
            "Operator morphism and relation morphism checks disagree",
            error_code="HOM_DUALITY_MISMATCH",
            details={"operator_side": lhs, "relation_side": rhs, "map": list(f.table)},
        )
    return lhs


def _require_unary(*ops: Operator) -> None:
    for op in ops:
        if (op.k, op.n) != (1, 1):
            raise OperatorError(
                f"Expected a unary operator, got ({op.k}, {op.n})", error_code="OPERATOR_NOT_UNARY"
            )
