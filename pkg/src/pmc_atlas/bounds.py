"""Exact counting bounds on PMCs in terms of the vertex cover size ``k``.

Everything here is integer arithmetic; no floats.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

from .pmc import PmcCounts


def stirling2(n: int, k: int) -> int:
    """Partitions of an ``n``-set into ``k`` non-empty blocks."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    # row[j] holds S(m, j) for the current m
    row = [1] + [0] * k
    for m in range(1, n + 1):
        for j in range(min(m, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class FreeBoundTerms(NamedTuple):
    """Caps on free PMCs of the extended graph, by partition shape."""

    three_parts: int          # S(k,3)
    inner_one_part: int       # k 2^k
    inner_two_parts: int      # 6k S(k,3)
    inner_three_parts: int    # 4 S(k,4)

    @property
    def total(self) -> int:
        return sum(self)


def free_bound_terms(k: int) -> FreeBoundTerms:
    s3 = stirling2(k, 3)
    return FreeBoundTerms(s3, k * 2**k, 6 * k * s3, 4 * stirling2(k, 4))


def upper_bound(k: int, n: int) -> int:
    return 4**k + n


def nonfree_bound(k: int, n: int) -> int:
    """Vertex count of the extended graph, which caps its non-free PMCs."""
    return n + 2**k - 1


def lower_bound_sum(k: int) -> int:
    return sum(binomial(k, i) * stirling2(k - i, 3) for i in range(k + 1))


@dataclass(frozen=True)
class TheoremRow:
    k: int
    terms: FreeBoundTerms
    added_vertices: int       # 2^k - 1
    four_k: int
    total_ok: bool            # sum of terms + 2^k - 1 <= 4^k
    tail_ok: bool             # 6 * 4 S(k,4) <= 4^k

    @property
    def passed(self) -> bool:
        return self.total_ok and self.tail_ok

    def as_dict(self) -> dict:
        d = asdict(self)
        d["terms"] = self.terms._asdict()
        d["free_total"] = self.terms.total
        return d


def theorem_row(k: int) -> TheoremRow:
    terms = free_bound_terms(k)
    added = 2**k - 1
    four_k = 4**k
    return TheoremRow(
        k, terms, added, four_k,
        terms.total + added <= four_k,
        6 * terms.inner_three_parts <= four_k,
    )


def verify_theorem_inequality(k_max: int) -> list[TheoremRow]:
    """Check, for each ``1 <= k <= k_max``, that free and non-free caps sum to at most ``4^k + n``."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return [theorem_row(k) for k in range(1, k_max + 1)]


@dataclass(frozen=True)
class BoundReport:
    k: int
    n: int
    upper_total: int
    free_bound_terms: FreeBoundTerms
    nonfree_bound: int
    lower_sum: int
    observed_total: int | None = None
    observed_free: int | None = None
    observed_nonfree: int | None = None

    @property
    def within_upper(self) -> bool | None:
        if self.observed_total is None:
            return None
        return self.observed_total <= self.upper_total

    def as_dict(self) -> dict:
        d = asdict(self)
        d["free_bound_terms"] = self.free_bound_terms._asdict()
        return d


def bound_report(k: int, n: int, counts: PmcCounts | None = None) -> BoundReport:
    observed = (None, None, None) if counts is None else tuple(counts)
    return BoundReport(
        k, n, upper_bound(k, n), free_bound_terms(k), nonfree_bound(k, n),
        lower_bound_sum(k), *observed,
    )
