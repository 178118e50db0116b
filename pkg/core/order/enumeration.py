"""
Exhaustive enumeration of small order-theoretic structures.
"""

import logging
from itertools import permutations
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .bits import is_subset, iter_bits
from .poset import MonotoneMap, Poset
from .relations import OrderRelation

logger = logging.getLogger(__name__)

_POSET_CACHE: Dict[int, Tuple[Poset, ...]] = {}


def canonical_key(p: Poset) -> bytes:
    """Isomorphism-invariant key: least relabelled order matrix.

    Only relabelings that keep (|down x|, |up x|) signatures sorted are tried.
    """
    sig = [(int(p.leq[:, x].sum()), int(p.leq[x, :].sum())) for x in range(p.n)]
    classes: Dict[Tuple[int, int], List[int]] = {}
    for x in range(p.n):
        classes.setdefault(sig[x], []).append(x)
    keys = sorted(classes)
    best = None
    for arrangement in _class_arrangements([classes[k] for k in keys]):
        idx = np.array(arrangement, dtype=int)
        key = np.packbits(p.leq[np.ix_(idx, idx)]).tobytes()
        if best is None or key < best:
            best = key
    return bytes([p.n]) + (best or b"")


def _class_arrangements(groups: List[List[int]]) -> Iterator[List[int]]:
    if not groups:
        yield []
        return
    for head in permutations(groups[0]):
        for rest in _class_arrangements(groups[1:]):
            yield list(head) + rest


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return p.n == q.n and canonical_key(p) == canonical_key(q)


def enumerate_posets(n: int) -> Tuple[Poset, ...]:
    """
    All posets on n elements up to isomorphism.

    Every poset arises from one on n-1 elements by adding a new maximal element
    above a downset; duplicates are removed through canonical_key.
    """
    if n in _POSET_CACHE:
        return _POSET_CACHE[n]
    if n == 0:
        result: Tuple[Poset, ...] = (Poset(np.zeros((0, 0), dtype=bool)),)
    else:
        seen: Dict[bytes, Poset] = {}
        for smaller in enumerate_posets(n - 1):
            for candidate in _extensions(smaller):
                seen.setdefault(canonical_key(candidate), candidate)
        result = tuple(seen[k] for k in sorted(seen))
    logger.debug(f"Enumerated {len(result)} posets on {n} elements")
    _POSET_CACHE[n] = result
    return result


def _extensions(smaller: Poset) -> Iterator[Poset]:
    """smaller with a new maximal element added above each of its downsets."""
    n = smaller.n + 1
    for below in smaller.downsets:
        leq = np.zeros((n, n), dtype=bool)
        leq[: n - 1, : n - 1] = smaller.leq
        leq[n - 1, n - 1] = True
        for x in iter_bits(below):
            leq[x, n - 1] = True
        yield Poset(leq)


def enumerate_posets_by_downsets(max_downsets: int) -> Tuple[Poset, ...]:
    """
    All posets up to isomorphism with at most max_downsets downsets, by size.

    Removing a maximal element never adds downsets, so the extension step of
    enumerate_posets is pruned at every size.
    """
    level = [Poset(np.zeros((0, 0), dtype=bool))] if max_downsets >= 1 else []
    found: List[Poset] = []
    while level:
        found.extend(level)
        seen: Dict[bytes, Poset] = {}
        for smaller in level:
            for candidate in _extensions(smaller):
                if len(candidate.downsets) <= max_downsets:
                    seen.setdefault(canonical_key(candidate), candidate)
        level = [seen[k] for k in sorted(seen)]
    logger.debug(f"Enumerated {len(found)} posets with at most {max_downsets} downsets")
    return tuple(found)


def enumerate_posets_up_to(max_size: int) -> Iterator[Poset]:
    for n in range(max_size + 1):
        yield from enumerate_posets(n)


def enumerate_monotone_maps(p: Poset, q: Poset) -> Iterator[MonotoneMap]:
    """All monotone maps p -> q."""
    order = p.linear_extension
    table = [0] * p.n

    def extend(pos: int) -> Iterator[MonotoneMap]:
        if pos == len(order):
            yield MonotoneMap(p, q, tuple(table))
            return
        x = order[pos]
        allowed = q.full_mask
        for y in iter_bits(p.down[x] & ~(1 << x)):
            allowed &= q.up[table[y]]
        for v in iter_bits(allowed):
            table[x] = v
            yield from extend(pos + 1)

    yield from extend(0)


def enumerate_order_relations(p: Poset, q: Poset) -> Iterator[OrderRelation]:
    """All stable relations p -> q (antitone choices of upsets)."""
    order = p.linear_extension
    images = [0] * p.n
    upsets = q.upsets

    def extend(pos: int) -> Iterator[OrderRelation]:
        if pos == len(order):
            yield OrderRelation(p, q, tuple(images))
            return
        x = order[pos]
        bound = q.full_mask
        for y in iter_bits(p.down[x] & ~(1 << x)):
            bound &= images[y]
        for u in upsets:
            if is_subset(u, bound):
                images[x] = u
                yield from extend(pos + 1)

    yield from extend(0)
