"""
Fixture languages, mostly over {a, b}, given as regular expressions.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from .dfa import DFA
from .regex import compile_regex


@dataclass(frozen=True)
class CorpusLanguage:
    name: str
    pattern: str
    alphabet: str = "ab"
    description: str = ""

    def compile(self) -> DFA:
        return _compiled(self.pattern, self.alphabet)


@lru_cache(maxsize=None)
def _compiled(pattern: str, alphabet: str) -> DFA:
    return compile_regex(pattern, alphabet)


LANGUAGE_CORPUS: Tuple[CorpusLanguage, ...] = (
    CorpusLanguage("all_words", "(a|b)*", description="every word"),
    CorpusLanguage("empty", "∅", description="no word"),
    CorpusLanguage("empty_word", "ε", description="only the empty word"),
    CorpusLanguage("ab_star", "(ab)*", description="repetitions of ab"),
    CorpusLanguage("ab_plus", "(ab)+", description="nonempty repetitions of ab"),
    CorpusLanguage("a_star_b_star", "a*b*", description="a block of a then a block of b"),
    CorpusLanguage("a_star", "a*", description="words without b"),
    CorpusLanguage("contains_aba", "(a|b)*aba(a|b)*", description="words with factor aba"),
    CorpusLanguage("contains_aa", "(a|b)*aa(a|b)*", description="words with factor aa"),
    CorpusLanguage("ends_with_a", "(a|b)*a", description="words ending in a"),
    CorpusLanguage("starts_with_a", "a(a|b)*", description="words starting with a"),
    CorpusLanguage("even_a_count", "(b*ab*a)*b*", description="an even number of a"),
    CorpusLanguage("second_last_a", "(a|b)*a(a|b)", description="a in the second last place"),
    CorpusLanguage("a_or_bb", "a|bb", description="the words a and bb"),
    CorpusLanguage("even_length_unary", "(aa)*", alphabet="a", description="even length over {a}"),
)

CORPUS_BY_NAME: Dict[str, CorpusLanguage] = {lang.name: lang for lang in LANGUAGE_CORPUS}
