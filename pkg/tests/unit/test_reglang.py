"""
Unit tests for automata, regular expressions and syntactic monoids.
"""

import pytest

from core.exceptions import AutomatonError, InvalidDFAError, MonoidMismatchError, RegexSyntaxError
from core.monoids import cyclic_group, is_isomorphic, trivial_monoid
from core.reglang import (
    CORPUS_BY_NAME,
    DFA,
    LANGUAGE_CORPUS,
    brzozowski_derivative,
    check_alphabet,
    compile_regex,
    derivative_classes,
    gamma_of_language,
    is_equivalent,
    is_minimal,
    language_residual,
    minimize,
    recognition_failure,
    recognizing_congruences,
    residual_failure,
    residuation_ideal_of,
    saturation_failure,
    syntactic_monoid,
    syntactic_order,
    two_sided_residual,
    words,
)


@pytest.fixture
def ab_star():
    return syntactic_monoid(compile_regex("(ab)*"))


class TestDFA:
    """Test automaton validation and minimization."""

    def test_bad_target(self):
        with pytest.raises(InvalidDFAError) as exc:
            DFA(("a",), ((1,),), 0, frozenset())
        assert exc.value.error_code == "DFA_BAD_TARGET"

    def test_no_states(self):
        with pytest.raises(InvalidDFAError) as exc:
            DFA(("a",), (), 0, frozenset())
        assert exc.value.error_code == "DFA_NO_STATES"

    def test_not_total(self):
        with pytest.raises(InvalidDFAError) as exc:
            DFA(("a", "b"), ((0,),), 0, frozenset())
        assert exc.value.error_code == "DFA_NOT_TOTAL"

    def test_alphabet(self):
        assert check_alphabet("ab") == ("a", "b")
        for bad in ("aa", "a*", "a "):
            with pytest.raises(InvalidDFAError) as exc:
                check_alphabet(bad)
            assert exc.value.error_code == "DFA_BAD_ALPHABET"

    def test_unknown_symbol(self):
        d = compile_regex("a*")
        with pytest.raises(AutomatonError) as exc:
            d.accepts("c")
        assert exc.value.error_code == "UNKNOWN_SYMBOL"

    def test_minimize_merges_and_drops(self):
        # three accepting states in a cycle, plus an unreachable one
        d = DFA(("a",), ((1,), (2,), (0,), (3,)), 0, frozenset({0, 1, 2}))
        m = minimize(d)
        assert m.n_states == 1
        assert m.accepts("aaaa")

    def test_words_shortlex(self):
        assert list(words("ab", 2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]

    def test_derivative(self):
        d = compile_regex("(ab)*")
        assert brzozowski_derivative(d, "a").accepts("b")
        assert not brzozowski_derivative(d, "a").accepts("")

    def test_complement(self):
        d = compile_regex("a*")
        assert not d.complement().accepts("aa")
        assert d.complement().accepts("ab")


class TestRegex:
    """Test the pattern compiler."""

    def test_operators(self):
        plus = compile_regex("a+")
        assert plus.accepts("aaa")
        assert not plus.accepts("")
        optional = compile_regex("ab?")
        assert optional.accepts("a") and optional.accepts("ab")
        assert not optional.accepts("abb")

    def test_empty_branch_is_empty_word(self):
        d = compile_regex("a|")
        assert d.accepts("") and d.accepts("a")

    def test_empty_and_epsilon(self):
        assert not any(compile_regex("∅").accepts(w) for w in words("ab", 3))
        eps = compile_regex("ε")
        assert eps.accepts("")
        assert not eps.accepts("a")

    def test_whitespace_ignored(self):
        assert is_equivalent(compile_regex("( a | b ) *"), compile_regex("(a|b)*"))

    def test_equivalent_patterns(self):
        assert is_equivalent(compile_regex("(a|b)*"), compile_regex("(a*b*)*"))
        assert not is_equivalent(compile_regex("a*"), compile_regex("(aa)*"))

    def test_minimal_state_counts(self):
        assert compile_regex("(ab)*").n_states == 3
        assert compile_regex("(a|b)*").n_states == 1

    def test_missing_paren(self):
        with pytest.raises(RegexSyntaxError) as exc:
            compile_regex("(ab")
        assert exc.value.error_code == "REGEX_SYNTAX"
        assert exc.value.details["position"] == 3

    def test_letter_outside_alphabet(self):
        with pytest.raises(RegexSyntaxError):
            compile_regex("c")

    def test_dangling_operator(self):
        with pytest.raises(RegexSyntaxError):
            compile_regex("*a")

    def test_corpus_compiles(self):
        for lang in LANGUAGE_CORPUS:
            assert lang.compile().alphabet == tuple(lang.alphabet)
        assert CORPUS_BY_NAME["even_length_unary"].compile().n_states == 2


class TestSyntacticMonoid:
    """Test transition monoids of minimal automata."""

    def test_even_length_is_cyclic(self):
        s = syntactic_monoid(compile_regex("(aa)*", "a"))
        assert s.witnesses == ("", "a")
        assert is_isomorphic(s.to_ordered_monoid(), cyclic_group(2))
        assert is_minimal(s)
        assert recognizing_congruences(s) == [(0, 1)]

    def test_all_words_is_trivial(self):
        s = syntactic_monoid(compile_regex("(a|b)*"))
        assert s.n == 1
        assert is_isomorphic(s.to_ordered_monoid(), trivial_monoid())

    def test_ab_star_elements(self, ab_star):
        assert ab_star.witnesses == ("", "a", "b", "aa", "ab", "ba")
        assert ab_star.image_of_language == 0b010001
        assert ab_star.element_of("abab") == 4
        assert ab_star.element_of("bb") == 3
        assert ab_star.label(0) == "ε"

    def test_oracles(self, ab_star):
        assert recognition_failure(ab_star, 5) is None
        assert residual_failure(ab_star, 4) is None
        assert saturation_failure(ab_star, 4) is None
        assert is_minimal(ab_star)

    def test_left_residual(self, ab_star):
        residual = language_residual(ab_star.language(1 << 1), ab_star.accepted)
        assert "b" in residual
        assert "bab" in residual
        assert "" not in residual
        assert "ab" not in residual

    def test_derivative_classes(self, ab_star):
        assert derivative_classes(ab_star, "a") == 1 << 2

    def test_two_sided_residual(self, ab_star):
        a = ab_star.language(1 << 1)
        b = ab_star.language(1 << 2)
        assert two_sided_residual(a, ab_star.accepted, b).mask == 0b100001

    def test_bad_mask(self, ab_star):
        with pytest.raises(AutomatonError) as exc:
            ab_star.language(1 << 6)
        assert exc.value.error_code == "LANGUAGE_BAD_MASK"

    def test_mismatched_monoids(self, ab_star):
        other = syntactic_monoid(compile_regex("a*"))
        with pytest.raises(MonoidMismatchError):
            language_residual(ab_star.accepted, other.accepted)

    def test_syntactic_order(self):
        # over {a, b}, a* has the identity below the zero
        s = syntactic_monoid(compile_regex("a*"))
        assert s.witnesses == ("", "b")
        order = syntactic_order(s)
        assert order.le(0, 1)
        assert not order.le(1, 0)

    def test_ordered_monoid_is_valid(self, ab_star):
        assert ab_star.to_ordered_monoid(ordered=True).n == 6


class TestIdealAndGamma:
    """Test the residuation ideal of a language and gamma(L)."""

    def test_discrete_ideal_is_whole(self, ab_star):
        ideal = residuation_ideal_of(ab_star)
        assert ideal.is_whole
        assert ideal.size == 64

    def test_even_length_ideal(self):
        ideal = residuation_ideal_of(compile_regex("(aa)*", "a"))
        assert ideal.is_whole
        assert is_isomorphic(ideal.dual_monoid(), cyclic_group(2))

    @pytest.mark.slow
    def test_twelve_element_monoid_ideal(self):
        s = syntactic_monoid(CORPUS_BY_NAME["contains_aba"].compile())
        assert s.n == 12
        ideal = residuation_ideal_of(s)
        assert ideal.is_whole
        assert ideal.size == 4096

    def test_gamma_of_empty_is_bottom(self):
        assert gamma_of_language(compile_regex("∅")).mask == 0

    def test_gamma_of_everything_is_top(self):
        element = gamma_of_language(compile_regex("(a|b)*"))
        assert element.mask == element.product.top

    def test_gamma_agrees_on_corpus(self):
        for name in ("ab_star", "a_star", "ends_with_a"):
            gamma_of_language(CORPUS_BY_NAME[name].compile())
