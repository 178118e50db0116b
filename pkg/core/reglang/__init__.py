"""
Reglang Module
Regular languages through their minimal automata and syntactic monoids.
"""

from .corpus import CORPUS_BY_NAME, LANGUAGE_CORPUS, CorpusLanguage
from .dfa import (
    DFA,
    EMPTY,
    EPSILON,
    brzozowski_derivative,
    check_alphabet,
    is_equivalent,
    minimize,
    words,
)
from .regex import NFA, compile_regex, determinize, parse_regex
from .syntactic import (
    CONGRUENCE_ENUMERATION_LIMIT,
    Language,
    LanguageIdeal,
    SyntacticMonoid,
    derivative_classes,
    gamma_of_language,
    is_minimal,
    language_residual,
    language_right_residual,
    recognition_failure,
    recognizing_congruences,
    residual_failure,
    residuation_ideal_of,
    saturation_failure,
    syntactic_monoid,
    syntactic_order,
    two_sided_residual,
)

__version__ = "0.1.0"
__all__ = [
    "CONGRUENCE_ENUMERATION_LIMIT",
    "CORPUS_BY_NAME",
    "CorpusLanguage",
    "DFA",
    "EMPTY",
    "EPSILON",
    "LANGUAGE_CORPUS",
    "Language",
    "LanguageIdeal",
    "NFA",
    "SyntacticMonoid",
    "brzozowski_derivative",
    "check_alphabet",
    "compile_regex",
    "derivative_classes",
    "determinize",
    "gamma_of_language",
    "is_equivalent",
    "is_minimal",
    "language_residual",
    "language_right_residual",
    "minimize",
    "parse_regex",
    "recognition_failure",
    "recognizing_congruences",
    "residual_failure",
    "residuation_ideal_of",
    "saturation_failure",
    "syntactic_monoid",
    "syntactic_order",
    "two_sided_residual",
    "words",
]
