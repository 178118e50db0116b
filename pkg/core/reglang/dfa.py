#!/usr/bin/env python3
"""
Deterministic Finite Automata
Complete DFAs over single-character alphabets, minimization by partition
refinement, word-level derivatives and bounded word enumeration.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from core.exceptions import AutomatonError, InvalidDFAError

logger = logging.getLogger(__name__)

EPSILON = "ε"
EMPTY = "∅"
RESERVED = frozenset("|*+?()" + EPSILON + EMPTY)


def check_alphabet(alphabet: Iterable[str]) -> Tuple[str, ...]:
    """Distinct single characters, none of them regex syntax or whitespace."""
    letters = tuple(alphabet)
    if len(set(letters)) != len(letters):
        raise InvalidDFAError(
            f"Alphabet {letters} repeats a symbol", error_code="DFA_BAD_ALPHABET"
        )
    for symbol in letters:
        if len(symbol) != 1 or symbol in RESERVED or symbol.isspace():
            raise InvalidDFAError(
                f"Symbol {symbol!r} cannot be used as a letter",
                error_code="DFA_BAD_ALPHABET",
                details={"symbol": symbol},
            )
    return letters


@dataclass(frozen=True)
class DFA:
    """
    Complete deterministic automaton on the states range(n).

    transitions[s][i] is the successor of state s on alphabet[i].
    """

    alphabet: Tuple[str, ...]
    transitions: Tuple[Tuple[int, ...], ...]
    initial: int
    accepting: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(
            self, "transitions", tuple(tuple(int(t) for t in row) for row in self.transitions)
        )
        object.__setattr__(self, "accepting", frozenset(int(s) for s in self.accepting))
        n = len(self.transitions)
        if n == 0:
            raise InvalidDFAError("A DFA needs at least one state", error_code="DFA_NO_STATES")
        for s, row in enumerate(self.transitions):
            if len(row) != len(self.alphabet):
                raise InvalidDFAError(
                    f"State {s} has {len(row)} transitions for {len(self.alphabet)} symbols",
                    error_code="DFA_NOT_TOTAL",
                    details={"state": s},
                )
            for t in row:
                if not 0 <= t < n:
                    raise InvalidDFAError(
                        f"State {s} moves to unknown state {t}",
                        error_code="DFA_BAD_TARGET",
                        details={"state": s, "target": t},
                    )
        if not 0 <= self.initial < n:
            raise InvalidDFAError(
                f"Initial state {self.initial} out of range", error_code="DFA_BAD_INITIAL"
            )
        outside = sorted(s for s in self.accepting if not 0 <= s < n)
        if outside:
            raise InvalidDFAError(
                f"Accepting states {outside} out of range",
                error_code="DFA_BAD_ACCEPTING",
                details={"states": outside},
            )

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    @cached_property
    def symbol_index(self) -> Dict[str, int]:
        return {symbol: i for i, symbol in enumerate(self.alphabet)}

    def check_word(self, word: str) -> None:
        for symbol in word:
            if symbol not in self.symbol_index:
                raise AutomatonError(
                    f"Symbol {symbol!r} is not in the alphabet {''.join(self.alphabet)}",
                    error_code="UNKNOWN_SYMBOL",
                    details={"word": word},
                )

    def run(self, word: str, state: Optional[int] = None) -> int:
        """State reached after reading word, from the initial state by default."""
        self.check_word(word)
        current = self.initial if state is None else state
        for symbol in word:
            current = self.transitions[current][self.symbol_index[symbol]]
        return current

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting

    def reachable(self) -> Tuple[int, ...]:
        """States reachable from the initial state, in breadth-first order."""
        order = [self.initial]
        seen = {self.initial}
        i = 0
        while i < len(order):
            for t in self.transitions[order[i]]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
            i += 1
        return tuple(order)

    def with_initial(self, state: int) -> "DFA":
        return DFA(self.alphabet, self.transitions, state, self.accepting)

    def complement(self) -> "DFA":
        rejecting = frozenset(range(self.n_states)) - self.accepting
        return DFA(self.alphabet, self.transitions, self.initial, rejecting)


def words(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length at most max_len, in shortlex order."""
    for length in range(max_len + 1):
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)


def _quotient(d: DFA, block: Dict[int, int]) -> DFA:
    representative: Dict[int, int] = {}
    for s in d.reachable():
        representative.setdefault(block[s], s)
    number = {block[d.initial]: 0}
    queue = [block[d.initial]]
    transitions = []
    i = 0
    while i < len(queue):
        row = []
        for t in d.transitions[representative[queue[i]]]:
            target = block[t]
            if target not in number:
                number[target] = len(number)
                queue.append(target)
            row.append(number[target])
        transitions.append(tuple(row))
        i += 1
    accepting = frozenset(number[b] for b, s in representative.items() if s in d.accepting)
    return DFA(d.alphabet, tuple(transitions), 0, accepting)


def minimize(d: DFA) -> DFA:
    """
    Minimal complete DFA for the language of d.

    Unreachable states are dropped, then blocks are split by the blocks of
    their successors until the partition is stable. States of the result are
    numbered breadth-first from the initial state, so two minimal DFAs for
    the same language over the same alphabet compare equal.
    """
    order = d.reachable()
    block = {s: int(s in d.accepting) for s in order}
    count = len(set(block.values()))
    rounds = 0
    while True:
        rounds += 1
        signatures: Dict[Tuple[int, ...], int] = {}
        refined = {}
        for s in order:
            key = (block[s],) + tuple(block[t] for t in d.transitions[s])
            refined[s] = signatures.setdefault(key, len(signatures))
        block = refined
        if len(signatures) == count:
            break
        count = len(signatures)
    logger.debug(f"Minimized {d.n_states} states to {count} in {rounds} rounds")
    return _quotient(d, block)


def is_equivalent(d1: DFA, d2: DFA) -> bool:
    """Same alphabet and the same language."""
    return d1.alphabet == d2.alphabet and minimize(d1) == minimize(d2)


def brzozowski_derivative(d: DFA, word: str) -> DFA:
    """Automaton for {v | word + v in L(d)}."""
    return d.with_initial(d.run(word))
