"""
Catdual Module
Small categories as local partial relational monoids, and their duals as
residuation CABAs.
"""

from .category import (
    FiniteCategory,
    arrow_category,
    build_category,
    canonical_category,
    categories_isomorphic,
    category_key,
    category_to_relmon,
    check_functor_correspondence,
    discrete_category,
    enumerate_categories,
    enumerate_functors,
    functor_as_morphism,
    functor_failure,
    is_functor,
    monoid_category,
    reflects_composability,
    relmon_to_category,
    terminal_category,
)
from .relmon import (
    RelationalMonoid,
    RelmonFlags,
    RelmonMorphism,
    associativity_failure,
    enumerate_relational_structures,
    enumerate_relmon_morphisms,
    enumerate_relmons,
    functorial_failure,
    is_functorial,
    partial_failure,
    powerset_partial_monoid,
    pure_failure,
    relabel_relmon,
    require_functorial,
    unit_failure,
    validate_relmon,
)
from .relmon import local_failure as relmon_local_failure
from .rescaba import (
    RescabaFlags,
    check_functor_duality,
    check_relmon_duality,
    classify_rescaba,
    composable_with,
    dualize_category_functor,
    dualize_functor,
    functional_failure,
    is_lax_unital,
    local_failure,
    relmon_to_rescaba,
    rescaba_of_category,
    unit_subsets,
)

__version__ = "0.1.0"
__all__ = [
    "FiniteCategory",
    "RelationalMonoid",
    "RelmonFlags",
    "RelmonMorphism",
    "RescabaFlags",
    "arrow_category",
    "associativity_failure",
    "build_category",
    "canonical_category",
    "categories_isomorphic",
    "category_key",
    "category_to_relmon",
    "check_functor_correspondence",
    "check_functor_duality",
    "check_relmon_duality",
    "classify_rescaba",
    "composable_with",
    "discrete_category",
    "dualize_category_functor",
    "dualize_functor",
    "enumerate_categories",
    "enumerate_functors",
    "enumerate_relational_structures",
    "enumerate_relmon_morphisms",
    "enumerate_relmons",
    "functional_failure",
    "functor_as_morphism",
    "functor_failure",
    "functorial_failure",
    "is_functor",
    "is_functorial",
    "is_lax_unital",
    "local_failure",
    "monoid_category",
    "partial_failure",
    "powerset_partial_monoid",
    "pure_failure",
    "reflects_composability",
    "relabel_relmon",
    "relmon_local_failure",
    "relmon_to_category",
    "relmon_to_rescaba",
    "require_functorial",
    "rescaba_of_category",
    "terminal_category",
    "unit_failure",
    "unit_subsets",
    "validate_relmon",
]
