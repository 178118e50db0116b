#!/usr/bin/env python3
"""
Regular Expressions
Recursive-descent compiler from patterns to minimal DFAs, through a Thompson
NFA and the subset construction.

Grammar, loosest binding first:
    alternation   := concatenation ('|' concatenation)*
    concatenation := repetition*
    repetition    := atom ('*' | '+' | '?')*
    atom          := letter | 'ε' | '∅' | '(' alternation ')'

An empty concatenation denotes the empty word. Whitespace is ignored.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, NoReturn, Optional, Sequence, Tuple

from core.exceptions import RegexSyntaxError

from .dfa import DFA, EMPTY, EPSILON, check_alphabet, minimize

logger = logging.getLogger(__name__)

Fragment = Tuple[int, int]


@dataclass
class NFA:
    """Thompson automaton; edges[s] lists (letter or None for epsilon, target)."""

    edges: List[List[Tuple[Optional[str], int]]] = field(default_factory=list)

    def state(self) -> int:
        self.edges.append([])
        return len(self.edges) - 1

    def edge(self, source: int, target: int, symbol: Optional[str] = None) -> None:
        self.edges[source].append((symbol, target))

    def fragment(self) -> Fragment:
        return self.state(), self.state()

    def closure(self, states: Iterable[int]) -> FrozenSet[int]:
        """States reachable through epsilon edges."""
        stack = list(states)
        seen = set(stack)
        while stack:
            s = stack.pop()
            for symbol, t in self.edges[s]:
                if symbol is None and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def move(self, states: FrozenSet[int], symbol: str) -> FrozenSet[int]:
        return self.closure(t for s in states for label, t in self.edges[s] if label == symbol)


class _Parser:
    def __init__(self, pattern: str, alphabet: Tuple[str, ...]):
        self.pattern = pattern
        self.tokens = [(i, c) for i, c in enumerate(pattern) if not c.isspace()]
        self.pos = 0
        self.alphabet = alphabet
        self.nfa = NFA()

    def parse(self) -> Fragment:
        fragment = self._alternation()
        if self._peek() is not None:
            self._fail(f"Unexpected {self._peek()!r}")
        return fragment

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def _fail(self, message: str) -> NoReturn:
        position = self.tokens[self.pos][0] if self.pos < len(self.tokens) else len(self.pattern)
        raise RegexSyntaxError(
            f"{message} at position {position} of {self.pattern!r}",
            error_code="REGEX_SYNTAX",
            details={"pattern": self.pattern, "position": position},
        )

    def _alternation(self) -> Fragment:
        branches = [self._concatenation()]
        while self._peek() == "|":
            self.pos += 1
            branches.append(self._concatenation())
        if len(branches) == 1:
            return branches[0]
        start, end = self.nfa.fragment()
        for entry, exit_ in branches:
            self.nfa.edge(start, entry)
            self.nfa.edge(exit_, end)
        return start, end

    def _concatenation(self) -> Fragment:
        parts = []
        while self._peek() not in (None, "|", ")"):
            parts.append(self._repetition())
        if not parts:
            start, end = self.nfa.fragment()
            self.nfa.edge(start, end)
            return start, end
        for (_, left_exit), (right_entry, _) in zip(parts, parts[1:]):
            self.nfa.edge(left_exit, right_entry)
        return parts[0][0], parts[-1][1]

    def _repetition(self) -> Fragment:
        entry, exit_ = self._atom()
        while self._peek() in ("*", "+", "?"):
            op = self._peek()
            self.pos += 1
            start, end = self.nfa.fragment()
            self.nfa.edge(start, entry)
            self.nfa.edge(exit_, end)
            if op in ("*", "?"):
                self.nfa.edge(start, end)
            if op in ("*", "+"):
                self.nfa.edge(exit_, entry)
            entry, exit_ = start, end
        return entry, exit_

    def _atom(self) -> Fragment:
        c = self._peek()
        if c is None:
            self._fail("Unexpected end of pattern")
        if c == "(":
            self.pos += 1
            inner = self._alternation()
            if self._peek() != ")":
                self._fail("Missing ')'")
            self.pos += 1
            return inner
        if c in (")", "|", "*", "+", "?"):
            self._fail(f"Unexpected {c!r}")
        if c != EPSILON and c != EMPTY and c not in self.alphabet:
            self._fail(f"Letter {c!r} is not in the alphabet {''.join(self.alphabet)!r}")
        self.pos += 1
        start, end = self.nfa.fragment()
        if c == EPSILON:
            self.nfa.edge(start, end)
        elif c != EMPTY:
            self.nfa.edge(start, end, c)
        return start, end


def parse_regex(pattern: str, alphabet: Sequence[str] = "ab") -> Tuple[NFA, Fragment]:
    """Thompson NFA of pattern with its (start, accept) states."""
    parser = _Parser(pattern, check_alphabet(alphabet))
    fragment = parser.parse()
    return parser.nfa, fragment


def determinize(nfa: NFA, fragment: Fragment, alphabet: Sequence[str]) -> DFA:
    """Subset construction; the empty subset becomes the sink state."""
    start, accept = fragment
    letters = check_alphabet(alphabet)
    initial = nfa.closure([start])
    index = {initial: 0}
    order = [initial]
    transitions = []
    i = 0
    while i < len(order):
        row = []
        for symbol in letters:
            moved = nfa.move(order[i], symbol)
            if moved not in index:
                index[moved] = len(order)
                order.append(moved)
            row.append(index[moved])
        transitions.append(tuple(row))
        i += 1
    accepting = frozenset(i for i, states in enumerate(order) if accept in states)
    return DFA(letters, tuple(transitions), 0, accepting)


def compile_regex(pattern: str, alphabet: Sequence[str] = "ab") -> DFA:
    """Minimal DFA of pattern over alphabet."""
    nfa, fragment = parse_regex(pattern, alphabet)
    dfa = minimize(determinize(nfa, fragment, alphabet))
    logger.debug(
        f"Compiled {pattern!r}: {len(nfa.edges)} NFA states, {dfa.n_states} minimal states"
    )
    return dfa
