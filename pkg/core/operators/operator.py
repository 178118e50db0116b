#!/usr/bin/env python3
"""
Join-Operators on Finite Distributive Lattices
A (k, n)-operator maps the k-th tensor power of a lattice to the n-th one,
preserving joins; it is stored as a monotone table on prime k-tuples.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Tuple

from core.exceptions import InvalidOperatorError, LatticeMismatchError
from core.lattice import FiniteDistLattice, LatticeMap, enumerate_join_maps
from core.order import is_subset, iter_bits, members
from core.tensor import TensorProduct, tensor_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Operator:
    """
    Join-preserving map from D^(x)k to D^(x)n.

    table[i] is the image of the pure prime tensor of the i-th prime k-tuple
    (row-major over the base), a downset of the n-th power of the base.
    """

    lattice: FiniteDistLattice
    k: int
    n: int
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if self.k < 0 or self.n < 0:
            raise InvalidOperatorError(
                f"Arities must be non-negative, got ({self.k}, {self.n})",
                error_code="OPERATOR_BAD_ARITY",
            )
        if len(self.table) != self.domain.base.n:
            raise InvalidOperatorError(
                f"Table has {len(self.table)} entries, expected {self.domain.base.n}",
                error_code="OPERATOR_BAD_TABLE",
            )
        for i, value in enumerate(self.table):
            if value not in self.codomain.index:
                raise InvalidOperatorError(
                    f"Entry {self.domain.product.tuple_of(i)} is not a downset",
                    error_code="OPERATOR_BAD_TABLE",
                    details={"input": list(self.domain.product.tuple_of(i))},
                )
        domain = self.domain.base
        for i in range(domain.n):
            for j in iter_bits(domain.up[i]):
                if not is_subset(self.table[i], self.table[j]):
                    raise InvalidOperatorError(
                        "Prime table is not monotone",
                        error_code="OPERATOR_NOT_MONOTONE",
                        details={
                            "witness": [
                                list(self.domain.product.tuple_of(i)),
                                list(self.domain.product.tuple_of(j)),
                            ]
                        },
                    )

    @cached_property
    def domain(self) -> TensorProduct:
        return tensor_power(self.lattice, self.k)

    @cached_property
    def codomain(self) -> TensorProduct:
        return tensor_power(self.lattice, self.n)

    def __call__(self, t: int) -> int:
        return eval_operator(self, t)

    def value(self, primes: Sequence[int]) -> int:
        """Image of the pure tensor of the given prime tuple."""
        return self.table[self.domain.product.index_of(primes)]

    def as_map(self) -> LatticeMap:
        return LatticeMap.from_function(self.domain, self.codomain, self)

    @classmethod
    def from_function(cls, d: FiniteDistLattice, k: int, n: int, fn) -> "Operator":
        """Operator whose table entry for a prime tuple b is fn(b)."""
        domain = tensor_power(d, k).product
        return cls(d, k, n, tuple(fn(domain.tuple_of(i)) for i in range(domain.n)))


def eval_operator(op: Operator, t: int) -> int:
    """Union of the table over all prime tuples in t."""
    if t not in op.domain.index:
        raise LatticeMismatchError(
            f"Mask {t:b} is not an element of the operator's domain",
            error_code="OPERATOR_LATTICE_MISMATCH",
        )
    out = 0
    for i in iter_bits(t):
        out |= op.table[i]
    return out


def identity_operator(d: FiniteDistLattice) -> Operator:
    return Operator(d, 1, 1, d.primes)


def meet_operator(d: FiniteDistLattice) -> Operator:
    """Binary meet as a (2, 1)-operator."""
    return Operator.from_function(d, 2, 1, lambda b: d.primes[b[0]] & d.primes[b[1]])


def bottom_operator(d: FiniteDistLattice, k: int = 1, n: int = 1) -> Operator:
    return Operator.from_function(d, k, n, lambda b: 0)


def top_operator(d: FiniteDistLattice) -> Operator:
    """Sends every nonzero element to top."""
    return Operator(d, 1, 1, (d.top,) * d.base.n)


def meet_with(d: FiniteDistLattice, c: int) -> Operator:
    """x -> x /\\ c."""
    d.check_element(c)
    return Operator(d, 1, 1, tuple(p & c for p in d.primes))


def operator_from_map(f: LatticeMap) -> Operator:
    """Unary operator of a join-preserving endomap."""
    if f.dom != f.cod:
        raise InvalidOperatorError(
            "Unary operator needs an endomap", error_code="OPERATOR_NOT_ENDOMAP"
        )
    if not f.is_join_preserving():
        raise InvalidOperatorError(
            "Map does not preserve finite joins",
            error_code="OPERATOR_NOT_JOIN_PRESERVING",
            details={"witness": list(f.join_failure() or (f.dom.bottom,))},
        )
    return Operator(f.dom, 1, 1, f.prime_values())


def heyting_operator(d: FiniteDistLattice, m: int) -> Operator:
    """x -> (m -> x); only an operator when this map preserves finite joins."""
    return operator_from_map(LatticeMap.from_function(d, d, lambda x: d.heyting(m, x)))


def compose_operators(h: Operator, g: Operator) -> Operator:
    """g after h: table entry eval(g, table_h(b))."""
    if h.lattice != g.lattice or h.n != g.k:
        raise InvalidOperatorError(
            f"Cannot compose ({h.k},{h.n}) with ({g.k},{g.n})",
            error_code="OPERATOR_NOT_COMPOSABLE",
        )
    return Operator(h.lattice, h.k, g.n, tuple(g(value) for value in h.table))


def tensor_operators(h: Operator, g: Operator) -> Operator:
    """h (x) g: arities add, tables multiply as rectangles."""
    if h.lattice != g.lattice:
        raise InvalidOperatorError(
            "Cannot tensor operators on different lattices", error_code="OPERATOR_LATTICE_MISMATCH"
        )
    width = g.codomain.base.n
    table = []
    for left in h.table:
        for right in g.table:
            out = 0
            for i in iter_bits(left):
                for j in iter_bits(right):
                    out |= 1 << (i * width + j)
            table.append(out)
    return Operator(h.lattice, h.k + g.k, h.n + g.n, tuple(table))


def enumerate_unary_operators(d: FiniteDistLattice) -> Iterator[Operator]:
    """Every unary operator on d."""
    for f in enumerate_join_maps(d, d):
        yield Operator(d, 1, 1, f.prime_values())


def enumerate_operators(d: FiniteDistLattice, k: int, n: int) -> Iterator[Operator]:
    """Every (k, n)-operator on d, by monotone prime tables."""
    domain = tensor_power(d, k).base
    targets = tensor_power(d, n).elements
    order = domain.linear_extension
    table = [0] * domain.n

    def extend(pos: int) -> Iterator[Operator]:
        if pos == len(order):
            yield Operator(d, k, n, tuple(table))
            return
        i = order[pos]
        floor = 0
        for j in iter_bits(domain.down[i] & ~(1 << i)):
            floor |= table[j]
        for v in targets:
            if is_subset(floor, v):
                table[i] = v
                yield from extend(pos + 1)

    yield from extend(0)


def describe(op: Operator) -> Tuple[Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]], ...]:
    """Table as (prime tuple, member tuples) rows."""
    rows = []
    for i, value in enumerate(op.table):
        rows.append(
            (
                op.domain.product.tuple_of(i),
                tuple(op.codomain.product.tuple_of(j) for j in members(value)),
            )
        )
    return tuple(rows)
