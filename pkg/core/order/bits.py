"""Bit-mask helpers: element sets are Python ints with bit i set for element i."""

from typing import Iterable, Iterator, Tuple


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of mask in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def members(mask: int) -> Tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
