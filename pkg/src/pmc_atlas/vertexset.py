"""Vertex sets as plain integer bitmasks.

Bit ``v`` of a mask is set iff vertex ``v`` is a member.  Python integers
give exact union (``|``), intersection (``&``), difference (``& ~``) and
equality for free; the helpers below cover the rest.
"""
from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int

EMPTY: VertexSet = 0


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def complement(s: VertexSet, n: int) -> VertexSet:
    return full_set(n) & ~s


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def size(s: VertexSet) -> int:
    return s.bit_count()


def iter_members(s: VertexSet) -> Iterator[int]:
    """Yield members in ascending order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def members(s: VertexSet) -> list[int]:
    return list(iter_members(s))


def lowest(s: VertexSet) -> int:
    if not s:
        raise ValueError("empty vertex set has no lowest member")
    return (s & -s).bit_length() - 1


def sort_key(s: VertexSet) -> tuple[int, ...]:
    """Key ordering sets lexicographically by their ascending member lists."""
    return tuple(iter_members(s))
