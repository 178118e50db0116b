#!/usr/bin/env python3
"""
Residuation Morphisms
Pure morphisms (lattice homs) and corelational morphisms (join- and
top-preserving maps) between unital residuation algebras.

Each notion has two independent characterizations:
    - pure: (Open) equations through the left adjoint, against Forth, Back,
      Back' and Unit with an existential witness search; and the coalgebra
      square (f [x] f) gamma-bar = gamma-bar' f with the counit triangle
    - corelational: rho(x\\z) <= rho(x)\\rho(z) with e' <= rho(e), against the
      lax comonoid square (rho (x) rho) gamma <= gamma' rho with the counit
"""

import logging
from typing import Optional, Tuple

from core.exceptions import ClassificationMismatchError, HomomorphismError, ResiduationError
from core.lattice import LatticeMap, left_adjoint
from core.order import is_subset
from core.tensor import BoxMap, box_map, tensor_of_homs

from .algebra import ResiduationAlgebra, gamma_from_residuals

logger = logging.getLogger(__name__)

Failure = Optional[Tuple[str, Tuple[int, ...]]]


def _require_carriers(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> None:
    if f.dom != r.lattice or f.cod != s.lattice:
        raise ResiduationError(
            "Map does not run between the carriers of the algebras",
            error_code="MORPHISM_CARRIER_MISMATCH",
        )


def _require_units(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> None:
    _require_carriers(f, r, s)
    for algebra in (r, s):
        if algebra.unit is None:
            raise ResiduationError(
                "Morphism checks need unital algebras",
                error_code="RESIDUATION_NOT_UNITAL",
                details={"algebra": repr(algebra)},
            )


def equation_failure(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> Failure:
    """
    First (y, z) breaking y\\f(z) = f(f*(y)\\z) or its right-handed twin,
    with f* the left adjoint of f. Units play no part.
    """
    _require_carriers(f, r, s)
    lower = left_adjoint(f)
    for y in s.lattice.elements:
        fy = lower(y)
        for z in r.lattice.elements:
            if s.ldiv(y, f(z)) != f(r.ldiv(fy, z)):
                return "left", (y, z)
            if s.rdiv(f(z), y) != f(r.rdiv(z, fy)):
                return "right", (y, z)
    return None


def open_failure(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> Failure:
    """First violated (Open) equation, or None."""
    _require_units(f, r, s)
    if left_adjoint(f)(s.unit) != r.unit:
        return "unit", (s.unit,)
    return equation_failure(f, r, s)


def is_open(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    return open_failure(f, r, s) is None


def forth_back_failure(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> Failure:
    """First violated condition among Forth, Back, Back' and Unit, or None."""
    _require_units(f, r, s)
    rel = r.lattice.elements
    for x in rel:
        for z in rel:
            if not is_subset(f(r.ldiv(x, z)), s.ldiv(f(x), f(z))):
                return "forth", (x, z)
            if not is_subset(f(r.rdiv(z, x)), s.rdiv(f(z), f(x))):
                return "forth", (z, x)
    for y in s.lattice.elements:
        above = [x for x in rel if is_subset(y, f(x))]
        for z in rel:
            if not any(s.ldiv(y, f(z)) == f(r.ldiv(x, z)) for x in above):
                return "back", (y, z)
            if not any(s.rdiv(f(z), y) == f(r.rdiv(z, x)) for x in above):
                return "back_prime", (y, z)
    for x in rel:
        if is_subset(r.unit, x) != is_subset(s.unit, f(x)):
            return "unit", (x,)
    return None


def _require_hom(f: LatticeMap) -> None:
    if not f.is_homomorphism():
        raise HomomorphismError(
            "Pure morphisms are lattice homomorphisms", error_code="MORPHISM_NOT_HOM"
        )


def is_residuation_morphism(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    """A lattice hom checked through (Open) and through Forth/Back/Unit; both must agree."""
    _require_hom(f)
    by_open = open_failure(f, r, s)
    by_search = forth_back_failure(f, r, s)
    if (by_open is None) != (by_search is None):
        raise ClassificationMismatchError(
            "Open equations and Forth/Back conditions disagree",
            error_code="MORPHISM_CHECK_MISMATCH",
            details={"open": list(by_open or ()), "forth_back": list(by_search or ())},
        )
    return by_open is None


def is_coalgebra_morphism(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    """(f [x] f) gamma-bar = gamma-bar' f and counit = counit' f."""
    _require_units(f, r, s)
    _require_hom(f)
    c = gamma_from_residuals(r)
    c2 = gamma_from_residuals(s)
    boxed = BoxMap.from_map(f)
    for z in r.lattice.elements:
        if box_map([boxed, boxed], c.barred(z)) != c2.barred(f(z)):
            return False
    return all(c.counit(x) == c2.counit(f(x)) for x in r.lattice.elements)


def check_pure_morphism(f: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    """Pure coalgebra morphism iff residuation morphism."""
    as_coalgebra = is_coalgebra_morphism(f, r, s)
    as_residuation = is_residuation_morphism(f, r, s)
    if as_coalgebra != as_residuation:
        raise ClassificationMismatchError(
            "Coalgebra and residuation morphism checks disagree",
            error_code="PURE_MORPHISM_MISMATCH",
            details={"coalgebra": as_coalgebra, "residuation": as_residuation},
        )
    return as_residuation


def _require_corelational_shape(rho: LatticeMap) -> None:
    if not (rho.is_join_preserving() and rho.preserves_top()):
        raise HomomorphismError(
            "Corelational morphisms preserve finite joins and top",
            error_code="CORELATIONAL_PRECONDITION",
            details={"witness": list(rho.join_failure() or ())},
        )


def is_corelational(rho: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    """rho(x\\z) <= rho(x)\\rho(z) for all x, z, and e' <= rho(e)."""
    _require_units(rho, r, s)
    _require_corelational_shape(rho)
    if not is_subset(s.unit, rho(r.unit)):
        return False
    return all(
        is_subset(rho(r.ldiv(x, z)), s.ldiv(rho(x), rho(z)))
        for x in r.lattice.elements
        for z in r.lattice.elements
    )


def is_corelational_comonoid_morphism(
    rho: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra
) -> bool:
    """(rho (x) rho) gamma <= gamma' rho and counit <= counit' rho."""
    _require_units(rho, r, s)
    _require_corelational_shape(rho)
    c = gamma_from_residuals(r)
    c2 = gamma_from_residuals(s)
    square = tensor_of_homs(rho, rho)
    for z in r.lattice.elements:
        if not is_subset(square(c(z)), c2(rho(z))):
            return False
    return all(is_subset(c.counit(x), c2.counit(rho(x))) for x in r.lattice.elements)


def check_corelational(rho: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    """Corelational comonoid morphism iff corelational residuation morphism."""
    as_comonoid = is_corelational_comonoid_morphism(rho, r, s)
    as_residuation = is_corelational(rho, r, s)
    if as_comonoid != as_residuation:
        raise ClassificationMismatchError(
            "Comonoid and residuation checks of a corelational morphism disagree",
            error_code="CORELATIONAL_MISMATCH",
            details={"comonoid": as_comonoid, "residuation": as_residuation},
        )
    return as_residuation
