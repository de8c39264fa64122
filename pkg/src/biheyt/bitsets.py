"""Subsets of {0..n-1} encoded as Python int bitmasks.

Bit i set means element i is a member. All enumeration loops in the
package sort subsets by (size, mask value); that order is the canonical
one used for stable output and golden tests.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def subset_key(mask: int) -> tuple[int, int]:
    """Canonical sort key: size first, then raw bit pattern."""
    return (mask.bit_count(), mask)


def all_subsets(n: int) -> range:
    """All subsets of an n-element ground set, as masks 0..2^n-1."""
    return range(1 << n)


def pattern(mask: int, width: int) -> str:
    """Bit-pattern string, position i = element i (e.g. {0,2} -> '101')."""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(width))


def from_pattern(text: str) -> int:
    m = 0
    for i, ch in enumerate(text):
        if ch == "1":
            m |= 1 << i
        elif ch != "0":
            raise ValueError(f"bad bit pattern {text!r}")
    return m
