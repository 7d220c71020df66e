"""Potential maximal cliques: membership test, free/non-free split, enumeration.

A set ``omega`` is a PMC iff (a) no component ``C`` of ``G - omega`` has
``N(C) == omega`` and (b) every non-adjacent pair of ``omega`` lies in the
neighborhood of a common component.  Enumeration tests every subset, so it
doubles as the trusted oracle for the rest of the package.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._scan import SCAN_MAX_VERTICES, scan_range
from .errors import BudgetError, ContractError, InputError, InvariantViolation
from .graph import Graph, _check_subset, _components, closed_neighborhood
from .vertexset import VertexSet, iter_members

DEFAULT_LIMIT = 26
LIMIT_ENV = "PMC_ATLAS_LIMIT"


@dataclass(frozen=True)
class PmcCheck:
    """Outcome of testing both PMC conditions on one set.

    ``full_component`` is set when the first condition fails and
    ``unjoined_pair`` when the second does.
    """

    no_full_component: bool
    cliquish: bool
    full_component: VertexSet | None = None
    unjoined_pair: tuple[int, int] | None = None

    @property
    def is_pmc(self) -> bool:
        return self.no_full_component and self.cliquish

    @property
    def witness(self):
        if not self.no_full_component:
            return self.full_component
        if not self.cliquish:
            return self.unjoined_pair
        return None

    def __bool__(self) -> bool:
        return self.is_pmc


@dataclass(frozen=True)
class PmcRecord:
    omega: VertexSet
    free: bool
    nonfree_center: int | None = None


class PmcCounts(NamedTuple):
    total: int
    free: int
    nonfree: int


def check_pmc(g: Graph, omega: VertexSet) -> PmcCheck:
    _check_subset(g, omega)
    comps = _components(g.adj, g.vertices & ~omega)
    full = next((c for c, nc in comps if nc == omega), None)
    pair = None
    for u in iter_members(omega):
        seen = g.adj[u] | 1 << u
        for _, nc in comps:
            if nc >> u & 1:
                seen |= nc
        missing = omega & ~seen
        if missing:
            v = (missing & -missing).bit_length() - 1
            pair = (u, v) if u < v else (v, u)
            break
    return PmcCheck(full is None, pair is None, full, pair)


def is_pmc(g: Graph, omega: VertexSet) -> bool:
    return check_pmc(g, omega).is_pmc


def _is_free(g: Graph, omega: VertexSet) -> bool:
    outside = ~omega
    return all(g.adj[v] & outside for v in iter_members(omega))


def is_free(g: Graph, omega: VertexSet, check: bool = True) -> bool:
    """True iff every vertex of the PMC ``omega`` has a neighbor outside it.

    With ``check`` the PMC precondition is verified first.
    """
    if check and not is_pmc(g, omega):
        raise ContractError("is_free expects a PMC")
    return _is_free(g, omega)


def nonfree_center(g: Graph, omega: VertexSet, check: bool = True) -> int:
    """Smallest vertex ``v`` with ``N[v] == omega`` for a non-free PMC."""
    if check and not is_pmc(g, omega):
        raise ContractError("nonfree_center expects a PMC")
    if _is_free(g, omega):
        raise ContractError("free PMC has no center")
    for v in iter_members(omega):
        if closed_neighborhood(g, v) == omega:
            return v
    raise InvariantViolation(f"non-free PMC {sorted(iter_members(omega))} is not a closed neighborhood")


def resolve_limit(limit: int | None = None) -> int:
    if limit is None:
        env = os.environ.get(LIMIT_ENV)
        if env is None:
            return DEFAULT_LIMIT
        try:
            limit = int(env)
        except ValueError:
            raise InputError(f"{LIMIT_ENV} must be an integer, got {env!r}") from None
    if limit < 0:
        raise InputError("brute-force limit must be non-negative")
    return min(limit, SCAN_MAX_VERTICES)


def _shards(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def pmc_masks(g: Graph, limit: int | None = None, jobs: int = 1) -> list[VertexSet]:
    """Every PMC of ``g`` as a bitmask, ascending."""
    cap = resolve_limit(limit)
    if g.n > cap:
        raise BudgetError(
            f"brute-force enumeration over 2^{g.n} subsets refused (limit n <= {cap}; "
            f"raise it with --limit or {LIMIT_ENV})"
        )
    adj = np.array(g.adj, dtype=np.int64)
    total = 1 << g.n
    if jobs <= 1 or total < 1 << 12:
        return [int(x) for x in scan_range(adj, g.n, 0, total)]
    shards = _shards(total, jobs * 4)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda r: scan_range(adj, g.n, r[0], r[1]), shards))
    return [int(x) for part in parts for x in part]


def _record(g: Graph, omega: VertexSet) -> PmcRecord:
    if _is_free(g, omega):
        return PmcRecord(omega, True)
    return PmcRecord(omega, False, nonfree_center(g, omega, check=False))


def enumerate_pmcs(g: Graph, limit: int | None = None, jobs: int = 1) -> list[PmcRecord]:
    return [_record(g, omega) for omega in pmc_masks(g, limit, jobs)]


def count_pmcs(g: Graph, limit: int | None = None, jobs: int = 1) -> PmcCounts:
    return summarize(enumerate_pmcs(g, limit, jobs))


def summarize(records: list[PmcRecord]) -> PmcCounts:
    free = sum(r.free for r in records)
    return PmcCounts(len(records), free, len(records) - free)
