#!/usr/bin/env python3
"""
Tensor Products of Finite Distributive Lattices
D (x) E is the downset lattice of J(D) x J(E); the same carrier read through
upsets gives the box product D [x] E.

Two encodings share one product poset:
    - tensor form: a downset t of prime tuples, generated by pure tensors
      x (x) y = x * y (product of downsets)
    - box form: an upset U of prime tuples, the tuples an element excludes;
      x [x] y has upset (J - x) * (J - y), meets are unions of upsets
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Sequence, Tuple

from core.exceptions import (
    ArityError,
    DualityCheckError,
    HomomorphismError,
    LatticeMismatchError,
)
from core.lattice import FiniteDistLattice, LatticeMap
from core.order import Poset, ProductPoset, iter_bits, members

logger = logging.getLogger(__name__)

DEFAULT_FORMULA_LIMIT = 12


class TensorProduct(FiniteDistLattice):
    """Tensor product of a list of lattices: downsets of the product of their bases."""

    def __init__(self, factors: Sequence[FiniteDistLattice]):
        self.factors: Tuple[FiniteDistLattice, ...] = tuple(factors)
        super().__init__(ProductPoset([f.base for f in self.factors]))

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def product(self) -> ProductPoset:
        assert isinstance(self.base, ProductPoset)
        return self.base

    def pure(self, xs: Sequence[int]) -> int:
        """Pure tensor x1 (x) ... (x) xn."""
        if len(xs) != self.arity:
            raise ArityError(
                f"Pure tensor of {len(xs)} elements in a product of arity {self.arity}",
                error_code="TENSOR_ARITY",
            )
        for x, factor in zip(xs, self.factors):
            if x not in factor.index:
                raise LatticeMismatchError(
                    f"Mask {x:b} is not an element of factor {factor!r}",
                    error_code="TENSOR_MIXED_LATTICES",
                )
        return self.product.product_mask(xs)

    def element(self, mask: int) -> "TensorElement":
        return TensorElement(self, mask)

    def __repr__(self) -> str:
        return f"TensorProduct(arity={self.arity}, size={self.size})"


@dataclass(frozen=True)
class TensorElement:
    """Element of a tensor product with its prime tuples exposed."""

    product: TensorProduct
    mask: int

    def __post_init__(self):
        self.product.check_element(self.mask)

    @property
    def arity(self) -> int:
        return self.product.arity

    @property
    def members(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.product.product.tuple_of(i) for i in members(self.mask))


@dataclass(frozen=True)
class BoxElement:
    """Element of a box product, stored as the upset of excluded prime tuples."""

    product: TensorProduct
    upset: int

    def __post_init__(self):
        if not self.product.base.is_upset(self.upset):
            raise LatticeMismatchError(
                "Box element must be an upset of prime tuples", error_code="BOX_NOT_UPSET"
            )

    def meet(self, other: "BoxElement") -> "BoxElement":
        return BoxElement(self.product, self.upset | other.upset)

    def join(self, other: "BoxElement") -> "BoxElement":
        return BoxElement(self.product, self.upset & other.upset)

    def leq(self, other: "BoxElement") -> bool:
        """Box order: fewer excluded tuples means larger."""
        return other.upset & ~self.upset == 0


def tensor_power(d: FiniteDistLattice, n: int) -> TensorProduct:
    """D tensored with itself n times; n = 0 gives the two-element lattice."""
    if n < 0:
        raise ArityError(f"Arity must be non-negative, got {n}", error_code="TENSOR_ARITY")
    return TensorProduct([d] * n)


def pure_tensor(d: FiniteDistLattice, xs: Sequence[int]) -> int:
    """Pure tensor of elements of d in the len(xs)-th tensor power."""
    return tensor_power(d, len(xs)).pure(xs)


def box(product: TensorProduct, xs: Sequence[int]) -> BoxElement:
    """x1 [x] ... [x] xn."""
    if len(xs) != product.arity:
        raise ArityError("Box arity mismatch", error_code="TENSOR_ARITY")
    complements = [f.top & ~x for f, x in zip(product.factors, xs)]
    return BoxElement(product, product.product.product_mask(complements))


def generators(product: TensorProduct, t: int) -> Tuple[Tuple[int, ...], ...]:
    """Maximal prime tuples of t; t is the join of their pure tensors of join-primes."""
    product.check_element(t)
    return tuple(product.product.tuple_of(i) for i in product.base.maximal(t))


def _require_square(product: TensorProduct) -> None:
    if product.arity != 2:
        raise ArityError(
            f"Operation needs a tensor square, got arity {product.arity}",
            error_code="TENSOR_ARITY",
        )


def omega(
    product: TensorProduct, t: int, formula_limit: int = DEFAULT_FORMULA_LIMIT
) -> BoxElement:
    """
    Isomorphism from the tensor form to the box form.

    With generators t = join of d_i (x) e_i, omega(t) is the meet over all
    A of (join of d_i, i in A) [x] (join of e_i, i not in A). The formula is
    evaluated when t has at most formula_limit generators and compared with the
    canonical injection-commuting isomorphism (the complement of t).
    """
    _require_square(product)
    canonical = BoxElement(product, product.top & ~t)
    prime_tuples = generators(product, t)
    if len(prime_tuples) > formula_limit:
        logger.debug(f"omega: {len(prime_tuples)} generators exceed limit, using canonical form")
        return canonical
    left, right = product.factors
    downs = [(left.base.down[p], right.base.down[q]) for p, q in prime_tuples]
    upset = 0
    for size in range(len(downs) + 1):
        for chosen in combinations(range(len(downs)), size):
            d = left.join_all(downs[i][0] for i in chosen)
            e = right.join_all(downs[i][1] for i in range(len(downs)) if i not in chosen)
            upset |= box(product, (d, e)).upset
    result = BoxElement(product, upset)
    if result != canonical:
        raise DualityCheckError(
            "omega formula disagrees with the canonical isomorphism",
            error_code="OMEGA_MISMATCH",
            details={"tensor": t, "formula": upset, "canonical": canonical.upset},
        )
    return result


def omega_inverse(b: BoxElement, formula_limit: int = DEFAULT_FORMULA_LIMIT) -> int:
    """
    Inverse of omega.

    With meet-generators b = meet of x_i [x] y_i, the result is the join over
    all A of (meet of x_i, i in A) (x) (meet of y_i, i not in A).
    """
    product = b.product
    _require_square(product)
    canonical = product.top & ~b.upset
    excluded = [product.product.tuple_of(i) for i in product.base.minimal(b.upset)]
    if len(excluded) > formula_limit:
        logger.debug(f"omega_inverse: {len(excluded)} generators exceed limit")
        return canonical
    left, right = product.factors
    meets = [
        (left.top & ~left.base.up[p], right.top & ~right.base.up[q]) for p, q in excluded
    ]
    t = 0
    for size in range(len(meets) + 1):
        for chosen in combinations(range(len(meets)), size):
            x = left.meet_all(meets[i][0] for i in chosen)
            y = right.meet_all(meets[i][1] for i in range(len(meets)) if i not in chosen)
            t |= product.pure((x, y))
    if t != canonical:
        raise DualityCheckError(
            "omega inverse formula disagrees with the canonical isomorphism",
            error_code="OMEGA_MISMATCH",
            details={"box": b.upset, "formula": t, "canonical": canonical},
        )
    return t


def limp(product: TensorProduct, x: int, t: int) -> int:
    """Tensor implication x -o t: join of all y with x (x) y <= t."""
    _require_square(product)
    right = product.factors[1]
    result = 0
    for q in range(right.base.n):
        if all(t >> product.product.index_of((p, q)) & 1 for p in iter_bits(x)):
            result |= 1 << q
    return result


def rimp(product: TensorProduct, t: int, y: int) -> int:
    """Tensor implication t o- y: join of all x with x (x) y <= t."""
    _require_square(product)
    left = product.factors[0]
    result = 0
    for p in range(left.base.n):
        if all(t >> product.product.index_of((p, q)) & 1 for q in iter_bits(y)):
            result |= 1 << p
    return result


def tensor_of_homs(f: LatticeMap, g: LatticeMap) -> LatticeMap:
    """f (x) g on pure tensors, extended by joins; f and g must preserve finite joins."""
    for h in (f, g):
        if not h.is_join_preserving():
            raise HomomorphismError(
                "Tensor of maps needs join-preserving factors",
                error_code="TENSOR_NOT_JOIN_PRESERVING",
                details={"witness": list(h.join_failure() or (h.dom.bottom,))},
            )
    dom = TensorProduct([f.dom, g.dom])
    cod = TensorProduct([f.cod, g.cod])
    rectangles: Dict[int, int] = {}
    for index in range(dom.base.n):
        p, q = dom.product.tuple_of(index)
        rectangles[index] = cod.pure((f(f.dom.primes[p]), g(g.dom.primes[q])))

    def apply(t: int) -> int:
        out = 0
        for index in iter_bits(t):
            out |= rectangles[index]
        return out

    return LatticeMap.from_function(dom, cod, apply)


@dataclass(frozen=True)
class BoxMap:
    """
    Meet-preserving map from a lattice into a box product.

    table maps each element of dom to an upset of the product of the target
    bases; arity-0 targets are the two-element lattice, whose upsets are 0 (top)
    and 1 (bottom).
    """

    dom: FiniteDistLattice
    targets: Tuple[Poset, ...]
    table: Dict[int, int]

    def __call__(self, x: int) -> int:
        return self.table[x]

    @classmethod
    def identity(cls, d: FiniteDistLattice) -> "BoxMap":
        return cls(d, (d.base,), {x: d.top & ~x for x in d.elements})

    @classmethod
    def from_map(cls, f: LatticeMap) -> "BoxMap":
        return cls(f.dom, (f.cod.base,), {x: f.cod.top & ~f(x) for x in f.dom.elements})

    @classmethod
    def from_function(
        cls, d: FiniteDistLattice, targets: Sequence[Poset], fn: Callable[[int], int]
    ) -> "BoxMap":
        return cls(d, tuple(targets), {x: fn(x) for x in d.elements})


def box_map(maps: Sequence[BoxMap], upset: int) -> int:
    """
    Apply the box product of meet-preserving maps to a box element.

    upset lives over the product of the domain bases of maps; the result lives
    over the concatenation of their target products, in row-major order.
    """
    dom = ProductPoset([m.dom.base for m in maps])
    sizes = [ProductPoset(m.targets).n for m in maps]
    result = 0
    for index in dom.minimal(upset):
        u = dom.tuple_of(index)
        indices = [0]
        for m, size, ui in zip(maps, sizes, u):
            x = m.dom.top & ~m.dom.base.up[ui]
            indices = [i * size + j for i in indices for j in iter_bits(m(x))]
        for i in indices:
            result |= 1 << i
    return result


def horizontal_upper(g: LatticeMap, g2: LatticeMap) -> LatticeMap:
    """omega^-1 (g [x] g2) omega on the tensor square, for meet-preserving g, g2."""
    dom = TensorProduct([g.dom, g2.dom])
    cod = TensorProduct([g.cod, g2.cod])
    maps = [BoxMap.from_map(g), BoxMap.from_map(g2)]
    return LatticeMap.from_function(dom, cod, lambda t: cod.top & ~box_map(maps, dom.top & ~t))

