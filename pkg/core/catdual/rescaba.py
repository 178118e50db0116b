#!/usr/bin/env python3
"""
Residuation CABAs
The powerset algebra of a relational monoid, with
    A\\C = {b | A o b within C},  C/A = {b | b o A within C},
its structural flags, and the dual of functorial morphisms as inverse images.

A residuation CABA is categorical when it is unital, associative,
functional (a\\(-) preserves nonempty joins for every atom a) and local
(x?\\x? = top, where x? = not(x\\bottom)). These are exactly the duals of
small categories.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from core.exceptions import (
    ClassificationMismatchError,
    DualityCheckError,
    ResiduationError,
    ResiduationPropertyError,
)
from core.lattice import FiniteDistLattice, LatticeMap
from core.order import antichain, is_subset
from core.residuation import ResiduationAlgebra, equation_failure, is_associative

from .category import FiniteCategory, category_to_relmon, functor_as_morphism
from .relmon import (
    RelationalMonoid,
    RelmonFlags,
    RelmonMorphism,
    pure_failure,
    require_functorial,
    unit_failure,
    validate_relmon,
)

logger = logging.getLogger(__name__)


def relmon_to_rescaba(m: RelationalMonoid, validate: bool = True) -> ResiduationAlgebra:
    """Powerset of the carrier with the residuals of the lifted multiplication."""
    d = FiniteDistLattice(antichain(m.n))

    def ldiv(a: int, c: int) -> int:
        return sum(1 << b for b in range(m.n) if is_subset(m.lift(a, 1 << b), c))

    def rdiv(c: int, a: int) -> int:
        return sum(1 << b for b in range(m.n) if is_subset(m.lift(1 << b, a), c))

    unit = m.identities if unit_failure(m) is None else None
    return ResiduationAlgebra(
        d,
        ldiv,
        rdiv,
        unit=unit,
        prime_product=lambda p, q: m.comp[p][q],
        validate=validate,
    )


def rescaba_of_category(c: FiniteCategory) -> ResiduationAlgebra:
    return relmon_to_rescaba(category_to_relmon(c))


def _require_boolean(r: ResiduationAlgebra) -> None:
    if not r.lattice.is_boolean:
        raise ResiduationPropertyError(
            "Residuation CABAs live on powersets", error_code="RESIDUATION_NOT_BOOLEAN"
        )


def composable_with(r: ResiduationAlgebra, x: int) -> int:
    """x? = not(x\\bottom): the elements some member of x composes with on the left."""
    _require_boolean(r)
    d = r.lattice
    return d.top & ~r.ldiv(x, d.bottom)


def functional_failure(r: ResiduationAlgebra) -> Optional[Tuple[int, int, int]]:
    """First (atom, x, y) with a\\(x \\/ y) != a\\x \\/ a\\y."""
    _require_boolean(r)
    d = r.lattice
    for atom, a in enumerate(d.primes):
        for x, y in d.pairs():
            if r.ldiv(a, x | y) != r.ldiv(a, x) | r.ldiv(a, y):
                return atom, x, y
    return None


def local_failure(r: ResiduationAlgebra) -> Optional[int]:
    """
    First x with x?\\x? != top, cross-checked against x? o top within x?.
    """
    d = r.lattice
    by_residual = None
    by_product = None
    for x in d.elements:
        q = composable_with(r, x)
        if by_residual is None and r.ldiv(q, q) != d.top:
            by_residual = x
        if by_product is None and not is_subset(r.mu(q, d.top), q):
            by_product = x
    if (by_residual is None) != (by_product is None):
        raise ClassificationMismatchError(
            "Locality through residuals and through products disagree",
            error_code="RESCABA_LOCALITY_MISMATCH",
            details={"residual": by_residual, "product": by_product},
        )
    return by_residual


@dataclass(frozen=True)
class RescabaFlags:
    unital: bool
    associative: bool
    functional: bool
    local: bool

    @property
    def categorical(self) -> bool:
        return self.unital and self.associative and self.functional and self.local

    def to_dict(self) -> Dict[str, bool]:
        flags = asdict(self)
        flags["categorical"] = self.categorical
        return flags


def classify_rescaba(r: ResiduationAlgebra) -> RescabaFlags:
    _require_boolean(r)
    flags = RescabaFlags(
        unital=r.is_unital,
        associative=is_associative(r),
        functional=functional_failure(r) is None,
        local=local_failure(r) is None,
    )
    logger.debug(f"Classified residuation CABA over {r.lattice.base.n} atoms: {flags}")
    return flags


def unit_subsets(m: RelationalMonoid) -> List[int]:
    """Every E' with E' o x = {x} = x o E' for all x; there is at most one."""
    return [
        e
        for e in range(m.full_mask + 1)
        if all(m.lift(e, 1 << x) == 1 << x == m.lift(1 << x, e) for x in range(m.n))
    ]


def check_relmon_duality(m: RelationalMonoid) -> Tuple[RelmonFlags, RescabaFlags]:
    """
    Flags of m and of its dual, which must match: partial with functional,
    local with local, associative with associative, and having some unit
    subset with unital, that subset being the unit of the dual.
    """
    flags = validate_relmon(m)
    r = relmon_to_rescaba(m, validate=False)
    dual = classify_rescaba(r)
    units = unit_subsets(m)
    pairs = {
        "partial/functional": (flags.partial, dual.functional),
        "local/local": (flags.local, dual.local),
        "associative/associative": (flags.associative, dual.associative),
        "unit/unital": (bool(units), dual.unital),
    }
    broken = [name for name, (left, right) in pairs.items() if left != right]
    if units and r.unit != units[0]:
        broken.append("unit/unit")
    if broken:
        raise ClassificationMismatchError(
            "Relational monoid and its dual residuation CABA disagree",
            error_code="RELMON_DUALITY_MISMATCH",
            details={"properties": broken, "relmon": flags.to_dict(), "dual": dual.to_dict()},
        )
    return flags, dual


def is_lax_unital(h: LatticeMap, r: ResiduationAlgebra, s: ResiduationAlgebra) -> bool:
    """e_s <= h(e_r) for h from the carrier of r to the carrier of s."""
    for algebra in (r, s):
        if algebra.unit is None:
            raise ResiduationError(
                "Lax unitality needs unital algebras", error_code="RESIDUATION_NOT_UNITAL"
            )
    return is_subset(s.unit, h(r.unit))


def _inverse_image(f: RelmonMorphism) -> Tuple[LatticeMap, ResiduationAlgebra, ResiduationAlgebra]:
    r = relmon_to_rescaba(f.cod)
    s = relmon_to_rescaba(f.dom)
    return LatticeMap.from_function(r.lattice, s.lattice, f.preimage), r, s


def dualize_functor(f: RelmonMorphism) -> LatticeMap:
    """
    h = f^-1 from the dual of the codomain to the dual of the domain.

    h must preserve joins and meets, satisfy x\\h(z) = h(h*(x)\\z) and be lax
    unital; a failure of any of these is a duality error.
    """
    require_functorial(f)
    h, r, s = _inverse_image(f)
    if not h.is_homomorphism():
        raise DualityCheckError(
            "Inverse image is not a lattice homomorphism", error_code="DUAL_NOT_COMPLETE_HOM"
        )
    failure = equation_failure(h, r, s)
    if failure is not None:
        raise DualityCheckError(
            "Inverse image breaks the residuation equation",
            error_code="DUAL_RESIDUATION_EQUATION",
            details={"side": failure[0], "witness": list(failure[1])},
        )
    if r.unit is not None and s.unit is not None and not is_lax_unital(h, r, s):
        raise DualityCheckError(
            "Inverse image of a functorial morphism is not lax unital",
            error_code="DUAL_NOT_LAX_UNITAL",
        )
    return h


def dualize_category_functor(c: FiniteCategory, c2: FiniteCategory, mapping) -> LatticeMap:
    return dualize_functor(functor_as_morphism(c, c2, mapping))


def check_functor_duality(f: RelmonMorphism) -> bool:
    """For f with f[x o y] = f(x) o f(y): functorial iff f^-1 is lax unital."""
    if pure_failure(f) is not None:
        raise ResiduationError(
            "Functor duality is stated for pure morphisms", error_code="MORPHISM_NOT_PURE"
        )
    h, r, s = _inverse_image(f)
    functorial = not f.image(f.dom.identities) & ~f.cod.identities
    lax = is_lax_unital(h, r, s)
    if functorial != lax:
        raise ClassificationMismatchError(
            "Functoriality and lax unitality of the dual disagree",
            error_code="FUNCTOR_DUALITY_MISMATCH",
            details={"table": list(f.table), "functorial": functorial, "lax_unital": lax},
        )
    return functorial
