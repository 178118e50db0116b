#!/usr/bin/env python3
"""
Modal Correspondence
Checks that an (in)equation on a unary operator holds exactly when its dual
relation has the matching first-order property.

Both columns are computed independently: the operator column quantifies over
all lattice elements, the relation column over prime pairs of the dual
relation, with order-aware existentials that reduce to the classical
conditions on discrete posets.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product as cartesian
from typing import Dict, Optional, Tuple, Union

from core.exceptions import CorrespondenceMismatchError, OperatorError
from core.lattice import FiniteDistLattice
from core.operators import DualRelation, Operator, enumerate_unary_operators, operator_relation
from core.order import OrderRelation, enumerate_posets_up_to, iter_bits

logger = logging.getLogger(__name__)

Witness = Tuple[int, ...]


class ModalProperty(Enum):
    """Properties with a known operator/relation correspondence."""

    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    EUCLIDEAN = "euclidean"
    TRANSITIVE = "transitive"
    TOTAL = "total"
    EMPTY = "empty"
    QUANTIFIER = "quantifier"

    @classmethod
    def parse(cls, tag: str) -> "ModalProperty":
        try:
            return cls(tag.strip().lower())
        except ValueError as e:
            raise OperatorError(
                f"Unknown modal property '{tag}'",
                error_code="UNKNOWN_PROPERTY",
                details={"allowed": [p.value for p in cls]},
            ) from e


# Operator column


def _reflexive_failure(h: Operator) -> Optional[Witness]:
    for a in h.lattice.elements:
        if a & ~h(a):
            return (a,)
    return None


def _symmetric_failure(h: Operator) -> Optional[Witness]:
    for a, b in h.lattice.pairs():
        if (a & h(b)) & ~h(h(a) & b):
            return a, b
    return None


def _euclidean_failure(h: Operator) -> Optional[Witness]:
    for a, b in h.lattice.pairs():
        if (h(a) & h(b)) & ~h(a & h(b)):
            return a, b
    return None


def _transitive_failure(h: Operator) -> Optional[Witness]:
    for a, b in h.lattice.pairs():
        if h(a & h(b)) & ~(h(a) & h(b)):
            return a, b
    return None


def _total_failure(h: Operator) -> Optional[Witness]:
    top = h.lattice.top
    return None if h(top) == top else (top,)


def _empty_failure(h: Operator) -> Optional[Witness]:
    top = h.lattice.top
    return None if h(top) == 0 else (top,)


_OPERATOR_CHECKS = {
    ModalProperty.REFLEXIVE: _reflexive_failure,
    ModalProperty.SYMMETRIC: _symmetric_failure,
    ModalProperty.EUCLIDEAN: _euclidean_failure,
    ModalProperty.TRANSITIVE: _transitive_failure,
    ModalProperty.TOTAL: _total_failure,
    ModalProperty.EMPTY: _empty_failure,
}


def operator_failure(h: Operator, prop: ModalProperty) -> Optional[Witness]:
    """First lattice elements violating the operator form of prop, or None."""
    _require_unary(h)
    if prop is ModalProperty.QUANTIFIER:
        for check in (_reflexive_failure, _euclidean_failure, _total_failure):
            witness = check(h)
            if witness is not None:
                return witness
        return None
    return _OPERATOR_CHECKS[prop](h)


def operator_side(h: Operator, prop: ModalProperty) -> bool:
    return operator_failure(h, prop) is None


# Relation column; images r(x) = {y | x rho y}


def _reflexive(r: OrderRelation) -> Optional[Witness]:
    for x in range(r.dom.n):
        if not r.related(x, x):
            return (x,)
    return None


def _symmetric(r: OrderRelation) -> Optional[Witness]:
    # p rho q => some r <= q with p rho r and r rho p
    for p in range(r.dom.n):
        for q in iter_bits(r.images[p]):
            candidates = r.images[p] & r.cod.down[q]
            if not any(r.related(s, p) for s in iter_bits(candidates)):
                return p, q
    return None


def _euclidean(r: OrderRelation) -> Optional[Witness]:
    # x rho p and x rho q => some s <= p with x rho s and s rho q
    for x in range(r.dom.n):
        image = r.images[x]
        for p in iter_bits(image):
            candidates = image & r.cod.down[p]
            for q in iter_bits(image):
                if not any(r.related(s, q) for s in iter_bits(candidates)):
                    return x, p, q
    return None


def _transitive(r: OrderRelation) -> Optional[Witness]:
    for x in range(r.dom.n):
        for y in iter_bits(r.images[x]):
            missing = r.images[y] & ~r.images[x]
            if missing:
                return x, y, next(iter_bits(missing))
    return None


def _total(r: OrderRelation) -> Optional[Witness]:
    for x, image in enumerate(r.images):
        if not image:
            return (x,)
    return None


def _empty(r: OrderRelation) -> Optional[Witness]:
    for x, image in enumerate(r.images):
        if image:
            return x, next(iter_bits(image))
    return None


_RELATION_CHECKS = {
    ModalProperty.REFLEXIVE: _reflexive,
    ModalProperty.SYMMETRIC: _symmetric,
    ModalProperty.EUCLIDEAN: _euclidean,
    ModalProperty.TRANSITIVE: _transitive,
    ModalProperty.TOTAL: _total,
    ModalProperty.EMPTY: _empty,
}


def relation_failure(
    rho: Union[DualRelation, OrderRelation], prop: ModalProperty
) -> Optional[Witness]:
    """First prime tuple violating the relational form of prop, or None."""
    if isinstance(rho, DualRelation):
        if (rho.k, rho.n) != (1, 1):
            raise OperatorError(
                f"Expected a unary relation, got ({rho.k}, {rho.n})",
                error_code="OPERATOR_NOT_UNARY",
            )
        rho = rho.relation
    if prop is ModalProperty.QUANTIFIER:
        for check in (_reflexive, _euclidean, _total):
            witness = check(rho)
            if witness is not None:
                return witness
        return None
    return _RELATION_CHECKS[prop](rho)


def relation_side(rho: Union[DualRelation, OrderRelation], prop: ModalProperty) -> bool:
    return relation_failure(rho, prop) is None


@dataclass(frozen=True)
class CorrespondenceReport:
    """Both columns of one correspondence check."""

    prop: ModalProperty
    operator_holds: bool
    relation_holds: bool

    @property
    def agree(self) -> bool:
        return self.operator_holds == self.relation_holds

    def to_dict(self) -> Dict[str, object]:
        return {
            "property": self.prop.value,
            "operator_side": self.operator_holds,
            "relation_side": self.relation_holds,
            "agree": self.agree,
        }


def check_correspondence(h: Operator, prop: ModalProperty) -> CorrespondenceReport:
    """Evaluate both columns; raise CorrespondenceMismatchError when they differ."""
    op_witness = operator_failure(h, prop)
    rel_witness = relation_failure(operator_relation(h), prop)
    report = CorrespondenceReport(prop, op_witness is None, rel_witness is None)
    if not report.agree:
        raise CorrespondenceMismatchError(
            f"Operator and relation disagree on '{prop.value}'",
            error_code="CORRESPONDENCE_MISMATCH",
            details={
                "property": prop.value,
                "table": list(h.table),
                "operator_witness": list(op_witness or ()),
                "relation_witness": list(rel_witness or ()),
            },
        )
    return report


def _require_unary(h: Operator) -> None:
    if (h.k, h.n) != (1, 1):
        raise OperatorError(
            f"Expected a unary operator, got ({h.k}, {h.n})", error_code="OPERATOR_NOT_UNARY"
        )


@dataclass
class PropertyTally:
    checked: int = 0
    holds: int = 0
    agree: int = 0


def sweep_correspondence(max_size: int = 3) -> Dict[str, PropertyTally]:
    """
    Check every property on every unary operator of every lattice whose
    base poset has at most max_size elements.

    Mismatches raise immediately; the tallies count operators where the
    property holds.
    """
    tallies = {prop.value: PropertyTally() for prop in ModalProperty}
    lattices = 0
    for base in enumerate_posets_up_to(max_size):
        d = FiniteDistLattice(base)
        lattices += 1
        for h, prop in cartesian(enumerate_unary_operators(d), ModalProperty):
            report = check_correspondence(h, prop)
            tally = tallies[prop.value]
            tally.checked += 1
            tally.agree += 1
            tally.holds += int(report.operator_holds)
    logger.info(
        f"Correspondence sweep over {lattices} lattices: "
        f"{tallies['reflexive'].checked} operators per property"
    )
    return tallies
