"""
Monoids Module
Finite ordered monoids and their duality with derivation algebras.
"""

from .duality import (
    RelationalMonoidMorphism,
    check_relational_morphism,
    compose_relational_morphisms,
    derivation_to_monoid,
    dualize_monoid_hom,
    dualize_relational_morphism,
    identity_relational,
    inverse_relation,
    monoid_to_derivation,
    relational_failure,
    relational_graph,
)
from .monoid import (
    MonoidHom,
    OrderedMonoid,
    associativity_failure,
    canonical_form,
    cyclic_group,
    enumerate_monoid_homs,
    enumerate_ordered_monoids,
    find_isomorphism,
    free_idempotent_pair,
    is_isomorphic,
    relabel_monoid,
    trivial_monoid,
)

__version__ = "0.1.0"
__all__ = [
    "MonoidHom",
    "OrderedMonoid",
    "RelationalMonoidMorphism",
    "associativity_failure",
    "canonical_form",
    "check_relational_morphism",
    "compose_relational_morphisms",
    "cyclic_group",
    "derivation_to_monoid",
    "dualize_monoid_hom",
    "dualize_relational_morphism",
    "enumerate_monoid_homs",
    "enumerate_ordered_monoids",
    "find_isomorphism",
    "free_idempotent_pair",
    "identity_relational",
    "inverse_relation",
    "is_isomorphic",
    "monoid_to_derivation",
    "relabel_monoid",
    "relational_failure",
    "relational_graph",
    "trivial_monoid",
]
