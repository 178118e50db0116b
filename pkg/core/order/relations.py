"""
Order Relations
Kleisli morphisms of the downset monad between finite posets.

A relation R from P to Q is stored by its images r(x) = {y | x R y}. Membership
is stable under x' <= x, x R y, y <= y' => x' R y', so every image is an upset
of Q and images shrink as x grows.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from core.exceptions import PosetMismatchError, StabilityError

from .bits import iter_bits
from .poset import Poset, ProductPoset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderRelation:
    """Stable relation between two posets, stored as upset images."""

    dom: Poset
    cod: Poset
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(m) for m in self.images))
        if len(self.images) != self.dom.n:
            raise StabilityError(
                f"Expected {self.dom.n} images, got {len(self.images)}",
                error_code="RELATION_BAD_SHAPE",
            )
        for x, image in enumerate(self.images):
            if image >> self.cod.n:
                raise StabilityError(
                    f"Image of {x} leaves the codomain", error_code="RELATION_BAD_SHAPE"
                )
            if not self.cod.is_upset(image):
                y = next(iter_bits(self.cod.upset_mask(image) & ~image))
                lower = next(z for z in iter_bits(image) if self.cod.le(z, y))
                raise StabilityError(
                    f"{x} R {lower} and {lower} <= {y} but not {x} R {y}",
                    error_code="RELATION_NOT_STABLE",
                    details={"witness": [x, lower, y]},
                )
            for x_low in iter_bits(self.dom.down[x]):
                missing = image & ~self.images[x_low]
                if missing:
                    y = next(iter_bits(missing))
                    raise StabilityError(
                        f"{x_low} <= {x} and {x} R {y} but not {x_low} R {y}",
                        error_code="RELATION_NOT_STABLE",
                        details={"witness": [x_low, x, y]},
                    )

    @classmethod
    def from_pairs(
        cls, dom: Poset, cod: Poset, pairs: Iterable[Tuple[int, int]]
    ) -> "OrderRelation":
        """Relation with exactly the given pairs; raises StabilityError if not stable."""
        images = [0] * dom.n
        for x, y in pairs:
            dom.check_index(x)
            cod.check_index(y)
            images[x] |= 1 << y
        return cls(dom, cod, tuple(images))

    @classmethod
    def generated_by(
        cls, dom: Poset, cod: Poset, pairs: Iterable[Tuple[int, int]]
    ) -> "OrderRelation":
        """Smallest stable relation containing the given pairs."""
        images = [0] * dom.n
        for x, y in pairs:
            for x_low in iter_bits(dom.down[x]):
                images[x_low] |= cod.up[y]
        return cls(dom, cod, tuple(images))

    def related(self, x: int, y: int) -> bool:
        return bool(self.images[x] >> y & 1)

    @property
    def pairs(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((x, y) for x in range(self.dom.n) for y in iter_bits(self.images[x]))

    def sorted_pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def is_total(self) -> bool:
        return all(self.images)

    def is_empty(self) -> bool:
        return not any(self.images)


def identity(p: Poset) -> OrderRelation:
    """Unit of the monad: x relates to every y above it."""
    return OrderRelation(p, p, p.up)


def compose(r: OrderRelation, s: OrderRelation) -> OrderRelation:
    """Kleisli composite: first r, then s, by union over intermediate elements."""
    if r.cod != s.dom:
        raise PosetMismatchError(
            "Cannot compose relations: codomain of the first differs from domain of the second",
            error_code="POSET_MISMATCH",
        )
    images = []
    for image in r.images:
        out = 0
        for y in iter_bits(image):
            out |= s.images[y]
        images.append(out)
    return OrderRelation(r.dom, s.cod, tuple(images))


def tensor(r: OrderRelation, s: OrderRelation) -> OrderRelation:
    """Product relation on product posets: (x, x') relates to r(x) x s(x')."""
    dom = ProductPoset(_factors(r.dom) + _factors(s.dom))
    cod = ProductPoset(_factors(r.cod) + _factors(s.cod))
    width = s.cod.n
    images = []
    # row-major: the concatenated tuple (t, t') has index index(t) * |second| + index(t')
    for index in range(dom.n):
        left, right = divmod(index, s.dom.n)
        out = 0
        for i in iter_bits(r.images[left]):
            for j in iter_bits(s.images[right]):
                out |= 1 << (i * width + j)
        images.append(out)
    return OrderRelation(dom, cod, tuple(images))


def _factors(p: Poset) -> Tuple[Poset, ...]:
    return p.factors if isinstance(p, ProductPoset) else (p,)
