"""Helpers for subsets stored as int bitmasks over universe indices."""

from __future__ import annotations

from typing import Iterator


def popcount(mask: int) -> int:
    return mask.bit_count()


def indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def is_proper_subset(a: int, b: int) -> bool:
    return a != b and a & ~b == 0


def incomparable(a: int, b: int) -> bool:
    return a & ~b != 0 and b & ~a != 0


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def supermasks(mask: int, full: int) -> Iterator[int]:
    """All sets ``x`` with ``mask <= x <= full``."""
    free = full & ~mask
    for extra in submasks(free):
        yield mask | extra


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key for subsets: cardinality first, then the integer bit pattern."""
    return (popcount(mask), mask)
