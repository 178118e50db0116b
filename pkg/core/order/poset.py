#!/usr/bin/env python3
"""
Finite Posets
Exact order matrices, downsets/upsets as bit masks, monotone maps and products.

Elements of a poset are the indices 0..n-1. A set of elements is an int whose
bit i is set when element i belongs to it.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import IndexOutOfRangeError, InvalidPosetError, PosetMismatchError

from .bits import is_subset, iter_bits, members

logger = logging.getLogger(__name__)


class Poset:
    """
    Immutable finite partial order.

    The main attributes are:
        - n: number of elements, the carrier is range(n)
        - leq: read-only boolean n x n matrix, leq[i, j] iff i <= j
        - labels: optional element names

    The order matrix is checked for reflexivity, antisymmetry and transitivity
    on construction.
    """

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence[str]] = None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise InvalidPosetError(
                f"Order matrix must be square, got shape {leq.shape}",
                error_code="POSET_NOT_SQUARE",
            )
        n = leq.shape[0]
        if labels is not None and len(labels) != n:
            raise InvalidPosetError(
                f"Expected {n} labels, got {len(labels)}", error_code="POSET_BAD_LABELS"
            )
        self._check_order(leq)
        leq.flags.writeable = False
        self.n = n
        self.leq = leq
        self.labels: Optional[Tuple[str, ...]] = tuple(labels) if labels is not None else None

    @staticmethod
    def _check_order(leq: np.ndarray) -> None:
        n = leq.shape[0]
        bad = np.flatnonzero(~np.diag(leq))
        if bad.size:
            raise InvalidPosetError(
                f"Order is not reflexive at {int(bad[0])}",
                error_code="POSET_NOT_REFLEXIVE",
                details={"witness": [int(bad[0])]},
            )
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = (int(v) for v in np.argwhere(both)[0])
            raise InvalidPosetError(
                f"Order is not antisymmetric: {i} <= {j} <= {i}",
                error_code="POSET_NOT_ANTISYMMETRIC",
                details={"witness": [i, j]},
            )
        composite = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        missing = composite & ~leq
        if missing.any():
            i, k = (int(v) for v in np.argwhere(missing)[0])
            j = int(np.flatnonzero(leq[i] & leq[:, k])[0])
            raise InvalidPosetError(
                f"Order is not transitive: {i} <= {j} <= {k} but not {i} <= {k}",
                error_code="POSET_NOT_TRANSITIVE",
                details={"witness": [i, j, k]},
            )

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None
    ) -> "Poset":
        """
        Build a poset from generating pairs (i, j) meaning i <= j.

        Reflexive and transitive closure is taken; cycles are rejected as
        antisymmetry failures.
        """
        leq = np.eye(n, dtype=bool)
        for i, j in pairs:
            for x in (i, j):
                if not 0 <= x < n:
                    raise IndexOutOfRangeError(
                        f"Element {x} out of range for poset of size {n}",
                        error_code="INDEX_OUT_OF_RANGE",
                        details={"index": x, "size": n},
                    )
            leq[i, j] = True
        # Warshall closure
        for k in range(n):
            leq |= np.outer(leq[:, k], leq[k, :])
        return cls(leq, labels)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[bool]]) -> "Poset":
        return cls(np.array(rows, dtype=bool).reshape(len(rows), len(rows)))

    def __repr__(self) -> str:
        covers = [(i, j) for i in range(self.n) for j in range(self.n) if self.covers(i, j)]
        return f"Poset(n={self.n}, covers={covers})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.leq, other.leq))

    def __hash__(self) -> int:
        return hash((self.n, self.leq.tobytes()))

    # Order queries

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def covers(self, x: int, y: int) -> bool:
        """True iff y covers x."""
        if x == y or not self.leq[x, y]:
            return False
        between = self.leq[x] & self.leq[:, y]
        return int(between.sum()) == 2

    def check_index(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexOutOfRangeError(
                f"Element {x} out of range for poset of size {self.n}",
                error_code="INDEX_OUT_OF_RANGE",
                details={"index": x, "size": self.n},
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def down(self) -> Tuple[int, ...]:
        """down[x] is the mask of the principal downset of x."""
        return tuple(
            sum(1 << int(i) for i in np.flatnonzero(self.leq[:, x])) for x in range(self.n)
        )

    @cached_property
    def up(self) -> Tuple[int, ...]:
        """up[x] is the mask of the principal upset of x."""
        return tuple(
            sum(1 << int(j) for j in np.flatnonzero(self.leq[x, :])) for x in range(self.n)
        )

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        """Elements sorted so that x < y puts x first."""
        return tuple(sorted(range(self.n), key=lambda x: (int(self.leq[:, x].sum()), x)))

    @cached_property
    def is_discrete(self) -> bool:
        return bool(np.array_equal(self.leq, np.eye(self.n, dtype=bool)))

    # Down/up closure on masks

    def downset_mask(self, mask: int) -> int:
        result = 0
        for x in iter_bits(mask):
            result |= self.down[x]
        return result

    def upset_mask(self, mask: int) -> int:
        result = 0
        for x in iter_bits(mask):
            result |= self.up[x]
        return result

    def is_downset(self, mask: int) -> bool:
        return self.downset_mask(mask) == mask

    def is_upset(self, mask: int) -> bool:
        return self.upset_mask(mask) == mask

    def maximal(self, mask: int) -> Tuple[int, ...]:
        return tuple(x for x in iter_bits(mask) if self.up[x] & mask == 1 << x)

    def minimal(self, mask: int) -> Tuple[int, ...]:
        return tuple(x for x in iter_bits(mask) if self.down[x] & mask == 1 << x)

    def iter_downsets(self) -> Iterator[int]:
        """Yield every downset mask, deciding elements along a linear extension."""
        order = self.linear_extension
        strict_down = [self.down[x] & ~(1 << x) for x in range(self.n)]

        def extend(pos: int, current: int) -> Iterator[int]:
            if pos == len(order):
                yield current
                return
            x = order[pos]
            yield from extend(pos + 1, current)
            if is_subset(strict_down[x], current):
                yield from extend(pos + 1, current | (1 << x))

        yield from extend(0, 0)

    @cached_property
    def downsets(self) -> Tuple[int, ...]:
        """All downset masks in ascending integer order."""
        return tuple(sorted(self.iter_downsets()))

    @cached_property
    def upsets(self) -> Tuple[int, ...]:
        full = self.full_mask
        return tuple(sorted(full & ~d for d in self.downsets))

    def dual(self) -> "Poset":
        """The opposite order."""
        return Poset(self.leq.T.copy(), self.labels)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


class ProductPoset(Poset):
    """
    Componentwise product of a list of posets.

    Tuples are indexed row-major over the factor list: the last factor varies
    fastest, so index = sum(t[i] * stride[i]) with stride[i] the product of the
    sizes of the later factors. The empty product is the one-point poset.
    """

    def __init__(self, factors: Sequence[Poset]):
        self.factors: Tuple[Poset, ...] = tuple(factors)
        leq = np.ones((1, 1), dtype=bool)
        for p in self.factors:
            # Kronecker product of order matrices is the product order in row-major indexing
            leq = np.kron(leq, p.leq).astype(bool)
        super().__init__(leq)
        strides = []
        acc = 1
        for p in reversed(self.factors):
            strides.append(acc)
            acc *= p.n
        self.strides: Tuple[int, ...] = tuple(reversed(strides))

    def index_of(self, t: Sequence[int]) -> int:
        if len(t) != len(self.factors):
            raise PosetMismatchError(
                f"Tuple of length {len(t)} for a product of {len(self.factors)} factors",
                error_code="PRODUCT_ARITY_MISMATCH",
            )
        index = 0
        for x, p, stride in zip(t, self.factors, self.strides):
            p.check_index(x)
            index += x * stride
        return index

    def tuple_of(self, index: int) -> Tuple[int, ...]:
        self.check_index(index)
        return tuple((index // stride) % p.n for p, stride in zip(self.factors, self.strides))

    def product_mask(self, masks: Sequence[int]) -> int:
        """Mask of all tuples whose i-th component lies in masks[i]."""
        if len(masks) != len(self.factors):
            raise PosetMismatchError(
                f"Expected {len(self.factors)} component sets, got {len(masks)}",
                error_code="PRODUCT_ARITY_MISMATCH",
            )
        indices = [0]
        for m, stride in zip(masks, self.strides):
            indices = [i + x * stride for i in indices for x in iter_bits(m)]
        result = 0
        for i in indices:
            result |= 1 << i
        return result

    def project(self, mask: int, axis: int) -> int:
        """Mask of the axis-th components of the tuples in mask."""
        result = 0
        for index in iter_bits(mask):
            result |= 1 << self.tuple_of(index)[axis]
        return result

    def __repr__(self) -> str:
        return f"ProductPoset(factor_sizes={[p.n for p in self.factors]})"


def chain(n: int) -> Poset:
    """The n-element chain 0 < 1 < ... < n-1."""
    return Poset(np.triu(np.ones((n, n), dtype=bool)))


def antichain(n: int) -> Poset:
    """The n-element discrete poset."""
    return Poset(np.eye(n, dtype=bool))


def product_poset(ps: Sequence[Poset]) -> ProductPoset:
    """Componentwise product; row-major tuple indexing (see ProductPoset)."""
    return ProductPoset(ps)


def power_poset(p: Poset, n: int) -> ProductPoset:
    return ProductPoset([p] * n)


@dataclass(frozen=True)
class DownSet:
    """A downward-closed set of elements of a poset."""

    poset: Poset
    mask: int

    def __post_init__(self):
        if self.mask >> self.poset.n:
            raise IndexOutOfRangeError(
                f"Mask {self.mask:b} exceeds poset of size {self.poset.n}",
                error_code="INDEX_OUT_OF_RANGE",
            )
        if not self.poset.is_downset(self.mask):
            raise InvalidPosetError(
                f"Set {members(self.mask)} is not downward closed",
                error_code="NOT_A_DOWNSET",
                details={"members": list(members(self.mask))},
            )

    @property
    def members(self) -> Tuple[int, ...]:
        return members(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return len(self.members)


def downset_closure(p: Poset, seed: Iterable[int]) -> DownSet:
    """Smallest downset of p containing seed."""
    mask = 0
    for x in seed:
        p.check_index(x)
        mask |= 1 << x
    return DownSet(p, p.downset_mask(mask))


@dataclass(frozen=True)
class MonotoneMap:
    """Order-preserving map between posets, stored as an image table."""

    dom: Poset
    cod: Poset
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.dom.n:
            raise InvalidPosetError(
                f"Table has {len(self.table)} entries for a domain of size {self.dom.n}",
                error_code="MAP_BAD_TABLE",
            )
        for y in self.table:
            self.cod.check_index(y)
        for x in range(self.dom.n):
            for y in iter_bits(self.dom.up[x]):
                if not self.cod.le(self.table[x], self.table[y]):
                    raise InvalidPosetError(
                        f"Map is not monotone: {x} <= {y} but f({x}) > f({y})",
                        error_code="MAP_NOT_MONOTONE",
                        details={"witness": [x, y]},
                    )

    def __call__(self, x: int) -> int:
        return self.table[x]

    def preimage(self, mask: int) -> int:
        return sum(1 << x for x in range(self.dom.n) if mask >> self.table[x] & 1)

    def image(self, mask: int) -> int:
        result = 0
        for x in iter_bits(mask):
            result |= 1 << self.table[x]
        return result

    def then(self, other: "MonotoneMap") -> "MonotoneMap":
        """Diagrammatic composite: first self, then other."""
        if other.dom != self.cod:
            raise PosetMismatchError(
                "Cannot compose maps with mismatched posets", error_code="POSET_MISMATCH"
            )
        return MonotoneMap(self.dom, other.cod, tuple(other.table[y] for y in self.table))

    @classmethod
    def identity(cls, p: Poset) -> "MonotoneMap":
        return cls(p, p, tuple(range(p.n)))


def relabel(p: Poset, perm: Sequence[int]) -> Poset:
    """Poset whose element perm[i] plays the role of the old element i."""
    inverse: List[int] = [0] * p.n
    for i, j in enumerate(perm):
        inverse[j] = i
    idx = np.array(inverse, dtype=int)
    return Poset(p.leq[np.ix_(idx, idx)].copy())
