#!/usr/bin/env python3
"""
Syntactic Monoids
Transition monoid of the minimal DFA of a language, languages recognized by
it, their residuals, the residuation ideal generated by the language and the
comultiplication value gamma(L).

A language recognized by the monoid is a mask of elements. Residuals
K\\L = {v | Kv within L} and L/K = {v | vK within L} only depend on the
class of v, so they are computed on elements and read back on words through
the witnesses.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Set, Tuple, Union

import numpy as np

from core.exceptions import AutomatonError, DualityCheckError, MonoidMismatchError
from core.monoids import OrderedMonoid, derivation_to_monoid, monoid_to_derivation
from core.order import Poset, is_subset, iter_bits
from core.residuation import ResiduationAlgebra, ideal_algebra, residuation_ideal
from core.tensor import TensorElement, tensor_power

from .dfa import DFA, EPSILON, brzozowski_derivative, minimize, words

logger = logging.getLogger(__name__)

CONGRUENCE_ENUMERATION_LIMIT = 6


@dataclass(frozen=True)
class SyntacticMonoid:
    """
    Transition monoid of a minimal DFA.

    Element i acts on the states by functions[i] and is named by
    witnesses[i], the shortlex-least word inducing it; element 0 is the
    identity. mult[i][j] is the class of witnesses[i] + witnesses[j], and
    image_of_language is the mask of classes of accepted words.
    """

    dfa: DFA
    functions: Tuple[Tuple[int, ...], ...]
    mult: Tuple[Tuple[int, ...], ...]
    witnesses: Tuple[str, ...]
    image_of_language: int

    @property
    def n(self) -> int:
        return len(self.functions)

    @property
    def unit(self) -> int:
        return 0

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def letters(self) -> Dict[str, int]:
        """Element of each one-letter word."""
        index = {f: i for i, f in enumerate(self.functions)}
        n_states = self.dfa.n_states
        return {
            symbol: index[tuple(self.dfa.transitions[s][k] for s in range(n_states))]
            for k, symbol in enumerate(self.dfa.alphabet)
        }

    def label(self, x: int) -> str:
        return self.witnesses[x] or EPSILON

    def element_of(self, word: str) -> int:
        self.dfa.check_word(word)
        x = self.unit
        for symbol in word:
            x = self.mult[x][self.letters[symbol]]
        return x

    def recognizes(self, word: str) -> bool:
        return bool(self.image_of_language >> self.element_of(word) & 1)

    def multiply_sets(self, a: int, b: int) -> int:
        out = 0
        for x in iter_bits(a):
            for y in iter_bits(b):
                out |= 1 << self.mult[x][y]
        return out

    def quotient(self, left: int, right: int) -> int:
        """Classes x with left.x.right in the image of the language."""
        image = self.image_of_language
        return sum(
            1 << x for x in range(self.n) if image >> self.mult[self.mult[left][x]][right] & 1
        )

    @cached_property
    def contexts(self) -> Tuple[int, ...]:
        """contexts[m] is the mask of pairs (x, y), index x * n + y, with x.m.y accepted."""
        n = self.n
        image = self.image_of_language
        return tuple(
            sum(
                1 << (x * n + y)
                for x in range(n)
                for y in range(n)
                if image >> self.mult[self.mult[x][m]][y] & 1
            )
            for m in range(n)
        )

    def language(self, mask: int) -> "Language":
        return Language(self, mask)

    @property
    def accepted(self) -> "Language":
        return Language(self, self.image_of_language)

    def to_ordered_monoid(self, ordered: bool = False) -> OrderedMonoid:
        """The monoid on a discrete carrier, or under the syntactic order."""
        if ordered:
            carrier = syntactic_order(self)
        else:
            carrier = Poset(np.eye(self.n, dtype=bool), [self.label(x) for x in range(self.n)])
        return OrderedMonoid(carrier, self.mult, self.unit)


@dataclass(frozen=True)
class Language:
    """Union of classes of a syntactic monoid."""

    monoid: SyntacticMonoid
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.monoid.full_mask:
            raise AutomatonError(
                f"Mask {self.mask:b} is not a set of classes of a {self.monoid.n}-element monoid",
                error_code="LANGUAGE_BAD_MASK",
            )

    def __contains__(self, word: str) -> bool:
        return bool(self.mask >> self.monoid.element_of(word) & 1)

    def classes(self) -> Tuple[str, ...]:
        return tuple(self.monoid.label(x) for x in iter_bits(self.mask))


def syntactic_monoid(d: DFA) -> SyntacticMonoid:
    """Transition monoid of the minimal DFA of d, elements in shortlex order of witnesses."""
    minimal = minimize(d)
    n_states = minimal.n_states
    letter_maps = [
        tuple(minimal.transitions[s][k] for s in range(n_states))
        for k in range(len(minimal.alphabet))
    ]
    identity = tuple(range(n_states))
    functions: List[Tuple[int, ...]] = [identity]
    witnesses = [""]
    index = {identity: 0}
    i = 0
    while i < len(functions):
        f = functions[i]
        for symbol, g in zip(minimal.alphabet, letter_maps):
            h = tuple(g[f[s]] for s in range(n_states))
            if h not in index:
                index[h] = len(functions)
                functions.append(h)
                witnesses.append(witnesses[i] + symbol)
        i += 1
    k = len(functions)
    # reading witnesses[i] then witnesses[j]: functions[i] first
    mult = tuple(
        tuple(
            index[tuple(functions[j][functions[i][s]] for s in range(n_states))]
            for j in range(k)
        )
        for i in range(k)
    )
    image = sum(
        1 << i for i, f in enumerate(functions) if f[minimal.initial] in minimal.accepting
    )
    logger.debug(f"Syntactic monoid with {k} elements from {n_states} minimal states")
    return SyntacticMonoid(minimal, tuple(functions), mult, tuple(witnesses), image)


def _as_monoid(source: Union[DFA, SyntacticMonoid]) -> SyntacticMonoid:
    return source if isinstance(source, SyntacticMonoid) else syntactic_monoid(source)


def syntactic_order(s: SyntacticMonoid) -> Poset:
    """m <= n iff every context accepting n accepts m."""
    contexts = s.contexts
    leq = np.array(
        [[is_subset(contexts[b], contexts[a]) for b in range(s.n)] for a in range(s.n)],
        dtype=bool,
    )
    return Poset(leq, [s.label(x) for x in range(s.n)])


def _same_monoid(*languages: Language) -> SyntacticMonoid:
    first = languages[0].monoid
    for other in languages[1:]:
        if other.monoid != first:
            raise MonoidMismatchError(
                "Languages are recognized by different syntactic monoids",
                error_code="MONOID_MISMATCH",
                details={"sizes": [lang.monoid.n for lang in languages]},
            )
    return first


def language_residual(k: Language, target: Language) -> Language:
    """K\\L = {v | Kv within L}."""
    s = _same_monoid(k, target)
    mask = sum(
        1 << b
        for b in range(s.n)
        if all(target.mask >> s.mult[a][b] & 1 for a in iter_bits(k.mask))
    )
    return Language(s, mask)


def language_right_residual(target: Language, k: Language) -> Language:
    """L/K = {v | vK within L}."""
    s = _same_monoid(target, k)
    mask = sum(
        1 << b
        for b in range(s.n)
        if all(target.mask >> s.mult[b][a] & 1 for a in iter_bits(k.mask))
    )
    return Language(s, mask)


def two_sided_residual(k: Language, target: Language, k2: Language) -> Language:
    """K\\L/K' = {v | KvK' within L}."""
    s = _same_monoid(k, target, k2)
    mask = sum(
        1 << v
        for v in range(s.n)
        if all(
            target.mask >> s.mult[s.mult[a][v]][c] & 1
            for a in iter_bits(k.mask)
            for c in iter_bits(k2.mask)
        )
    )
    return Language(s, mask)


def derivative_classes(s: SyntacticMonoid, word: str) -> int:
    """Classes [w] with word + w accepted; the derivative of L by word is their union."""
    x = s.element_of(word)
    return sum(1 << w for w in range(s.n) if s.image_of_language >> s.mult[x][w] & 1)


def recognition_failure(s: SyntacticMonoid, max_len: int) -> Optional[str]:
    """First word up to max_len on which the monoid and the DFA disagree."""
    for word in words(s.dfa.alphabet, max_len):
        if s.recognizes(word) != s.dfa.accepts(word):
            return word
    return None


def residual_failure(s: SyntacticMonoid, max_len: int) -> Optional[Tuple[str, str]]:
    """
    First (u, v) with v up to max_len where [u]\\L disagrees with the
    derivative automaton of L by u, for u ranging over the witnesses.
    """
    accepted = s.accepted
    for x, u in enumerate(s.witnesses):
        residual = language_residual(s.language(1 << x), accepted)
        derivative = brzozowski_derivative(s.dfa, u)
        for v in words(s.dfa.alphabet, max_len):
            if (v in residual) != derivative.accepts(v):
                return u, v
    return None


def saturation_failure(s: SyntacticMonoid, max_len: int) -> Optional[Tuple[str, str]]:
    """
    First (u, w) with w up to max_len where membership of uw in L is not
    decided by the class of w, for u ranging over the witnesses.
    """
    for u in s.witnesses:
        classes = derivative_classes(s, u)
        for w in words(s.dfa.alphabet, max_len):
            if s.dfa.accepts(u + w) != bool(classes >> s.element_of(w) & 1):
                return u, w
    return None


def _set_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of range(n) as restricted growth strings."""
    prefix: List[int] = []

    def extend(blocks: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(blocks + 1):
            prefix.append(b)
            yield from extend(max(blocks, b + 1))
            prefix.pop()

    yield from extend(0)


def recognizing_congruences(s: SyntacticMonoid) -> List[Tuple[int, ...]]:
    """Congruences of the monoid whose classes saturate the image of L."""
    n = s.n
    image = s.image_of_language
    found = []
    for block in _set_partitions(n):
        pairs = [(m, k) for m in range(n) for k in range(m) if block[m] == block[k]]
        if any(image >> m & 1 != image >> k & 1 for m, k in pairs):
            continue
        if all(
            block[s.mult[x][m]] == block[s.mult[x][k]]
            and block[s.mult[m][x]] == block[s.mult[k][x]]
            for m, k in pairs
            for x in range(n)
        ):
            found.append(block)
    return found


def is_minimal(s: SyntacticMonoid) -> bool:
    """
    No proper quotient recognizes L: distinct elements have distinct contexts.

    Up to CONGRUENCE_ENUMERATION_LIMIT elements the verdict is checked
    against the list of all recognizing congruences.
    """
    separated = len(set(s.contexts)) == s.n
    if s.n <= CONGRUENCE_ENUMERATION_LIMIT:
        congruences = recognizing_congruences(s)
        only_trivial = congruences == [tuple(range(s.n))]
        if only_trivial != separated:
            raise DualityCheckError(
                "Context separation and congruence enumeration disagree on minimality",
                error_code="SYNTACTIC_MINIMALITY_MISMATCH",
                details={"separated": separated, "congruences": len(congruences)},
            )
    return separated


def _quotient_lattice(s: SyntacticMonoid, complemented: bool) -> Set[int]:
    """Bounded lattice generated by the quotients m\\L/n."""
    members = {0, s.full_mask}
    members.update(s.quotient(m, k) for m in range(s.n) for k in range(s.n))
    queue = list(members)
    while queue:
        x = queue.pop()
        found = [x | y for y in members] + [x & y for y in members]
        if complemented:
            found.append(s.full_mask & ~x)
        for y in found:
            if y not in members:
                members.add(y)
                queue.append(y)
    return members


@dataclass(frozen=True)
class LanguageIdeal:
    """
    Residuation ideal generated by the image of L in a downset algebra of
    the syntactic monoid: the discrete one closed under complement, or the
    one over the syntactic order.
    """

    monoid: SyntacticMonoid
    ordered: bool
    host: ResiduationAlgebra
    elements: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_whole(self) -> bool:
        return self.size == self.host.lattice.size

    @cached_property
    def algebra(self) -> Tuple[ResiduationAlgebra, Tuple[int, ...]]:
        """The ideal in canonical form with its embedding into the host."""
        return ideal_algebra(self.host, self.elements)

    def dual_monoid(self) -> OrderedMonoid:
        return derivation_to_monoid(self.algebra[0])


def _host(s: SyntacticMonoid, ordered: bool) -> ResiduationAlgebra:
    return monoid_to_derivation(s.to_ordered_monoid(ordered), validate=False)


def residuation_ideal_of(
    source: Union[DFA, SyntacticMonoid], ordered: bool = False
) -> LanguageIdeal:
    """
    Residuation ideal generated by L, computed by closure in the host algebra
    and checked against the lattice generated by the quotients m\\L/n.
    """
    s = _as_monoid(source)
    host = _host(s, ordered)
    complemented = not ordered
    ideal = residuation_ideal(host, [s.image_of_language], complemented=complemented)
    direct = _quotient_lattice(s, complemented)
    if set(ideal) != direct:
        raise DualityCheckError(
            "Residuation ideal of L differs from the lattice generated by its quotients",
            error_code="LANGUAGE_IDEAL_MISMATCH",
            details={
                "closure_only": sorted(set(ideal) - direct),
                "quotients_only": sorted(direct - set(ideal)),
            },
        )
    logger.debug(f"Residuation ideal of L has {len(ideal)} elements (ordered={ordered})")
    return LanguageIdeal(s, ordered, host, ideal)


def gamma_of_language(source: Union[DFA, SyntacticMonoid], ordered: bool = False) -> TensorElement:
    """
    gamma(L) as the join over classes m of m (x) m\\L, checked against the
    pairs whose product lies in L.
    """
    s = _as_monoid(source)
    host = _host(s, ordered)
    lattice = host.lattice
    square = tensor_power(lattice, 2)
    pairs = square.product
    image = s.image_of_language
    formula = 0
    for m in range(s.n):
        prime = lattice.primes[m]
        formula |= pairs.product_mask([prime, host.ldiv(prime, image)])
    adjoint = sum(
        1 << pairs.index_of((p, q))
        for p in range(s.n)
        for q in range(s.n)
        if is_subset(host.mu_prime(p, q), image)
    )
    if formula != adjoint:
        raise DualityCheckError(
            "gamma(L) from residuals differs from the adjoint of the multiplication",
            error_code="GAMMA_FORMULA_MISMATCH",
            details={
                "formula_only": [pairs.tuple_of(i) for i in iter_bits(formula & ~adjoint)],
                "adjoint_only": [pairs.tuple_of(i) for i in iter_bits(adjoint & ~formula)],
            },
        )
    return square.element(formula)
