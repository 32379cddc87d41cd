"""Bitsets over object or point indices, stored as plain Python ints."""

from __future__ import annotations

import typing as T

__all__ = ("iter_bits", "to_mask", "from_mask", "popcount", "lowest_bit")


def iter_bits(mask: int) -> T.Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices: T.Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1
