"""
Residuation Module
Finite residuation algebras, their comultiplications, ideals and morphisms.
"""

from .algebra import (
    Comonoid,
    ResiduationAlgebra,
    boolean_negation_algebra,
    counit_of,
    from_multiplication,
    gamma_from_residuals,
    heyting_algebra,
    mu_from_residuals,
    multiplication_operator,
    residuals_from_gamma,
)
from .classify import (
    ResiduationFlags,
    classify,
    gamma_coassociative,
    gamma_is_pure,
    is_associative,
    is_pure,
    join_preserving_at_primes,
    mu_associative,
    mu_preserves_primes,
    residuals_associative,
    residuals_pure_at_primes,
)
from .enumeration import enumerate_derivation_algebras, enumerate_residuation_algebras
from .ideals import ideal_algebra, residuation_ideal
from .morphisms import (
    check_corelational,
    check_pure_morphism,
    equation_failure,
    forth_back_failure,
    is_coalgebra_morphism,
    is_corelational,
    is_corelational_comonoid_morphism,
    is_open,
    is_residuation_morphism,
    open_failure,
)

__version__ = "0.1.0"
__all__ = [
    "Comonoid",
    "ResiduationAlgebra",
    "ResiduationFlags",
    "boolean_negation_algebra",
    "check_corelational",
    "check_pure_morphism",
    "classify",
    "counit_of",
    "enumerate_derivation_algebras",
    "enumerate_residuation_algebras",
    "equation_failure",
    "forth_back_failure",
    "from_multiplication",
    "gamma_coassociative",
    "gamma_from_residuals",
    "gamma_is_pure",
    "heyting_algebra",
    "ideal_algebra",
    "is_associative",
    "is_coalgebra_morphism",
    "is_corelational",
    "is_corelational_comonoid_morphism",
    "is_open",
    "is_pure",
    "is_residuation_morphism",
    "join_preserving_at_primes",
    "mu_associative",
    "mu_from_residuals",
    "mu_preserves_primes",
    "multiplication_operator",
    "open_failure",
    "residuals_associative",
    "residuals_pure_at_primes",
    "residuals_from_gamma",
    "residuation_ideal",
]
