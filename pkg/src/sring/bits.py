"""Bitmask helpers.

Subsets of a ring's carrier are stored as plain ints: bit ``i`` set means
element ``i`` is a member. Masks are cheap to intersect, union, and compare,
and they keep every report deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bit(i: int) -> int:
    return 1 << i


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(size: int) -> int:
    return (1 << size) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def popcount(mask: int) -> int:
    return mask.bit_count()
