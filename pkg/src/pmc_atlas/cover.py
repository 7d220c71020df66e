"""Vertex covers and the partition a PMC induces on a cover.

Given a cover ``V_k`` and a PMC ``omega``, the cover splits into
``V_k & omega`` and one part ``V_k & C`` per component ``C`` of
``G - omega`` that meets the cover.  On the extended graphs built by
:func:`pmc_atlas.constructions.build_M` at most three such parts exist.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetError, ContractError, InputError, InvariantViolation
from .graph import Graph, _check_subset, _components
from .pmc import PmcRecord, enumerate_pmcs, is_pmc
from .vertexset import VertexSet, iter_members, sort_key, vset

DEFAULT_COVER_BUDGET = 2_000_000


@dataclass(frozen=True)
class VertexCover:
    cover: VertexSet

    @property
    def k(self) -> int:
        return self.cover.bit_count()

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexCover:
        return cls(vset(vertices))

    def members(self) -> list[int]:
        return list(iter_members(self.cover))


class PartitionType(enum.Enum):
    """Shape of a cover partition: whether ``V_k & omega`` is non-empty and how many parts."""

    EMPTY = "{}"
    P1 = "{P1}"
    P1_P2 = "{P1,P2}"
    P1_P2_P3 = "{P1,P2,P3}"
    INNER = "{Vk&O}"
    INNER_P1 = "{Vk&O,P1}"
    INNER_P1_P2 = "{Vk&O,P1,P2}"
    INNER_P1_P2_P3 = "{Vk&O,P1,P2,P3}"
    OUT_OF_THEORY = "out-of-theory"

    @classmethod
    def of(cls, has_inner: bool, nparts: int) -> PartitionType:
        if nparts > 3:
            return cls.OUT_OF_THEORY
        table = (
            (cls.EMPTY, cls.P1, cls.P1_P2, cls.P1_P2_P3),
            (cls.INNER, cls.INNER_P1, cls.INNER_P1_P2, cls.INNER_P1_P2_P3),
        )
        return table[has_inner][nparts]


@dataclass(frozen=True)
class CoverPartition:
    inner_in_omega: VertexSet
    parts: tuple[VertexSet, ...]
    type_tag: PartitionType

    def sort_key(self):
        return (sort_key(self.inner_in_omega), tuple(sort_key(p) for p in self.parts))


def is_vertex_cover(g: Graph, s: VertexSet) -> bool:
    _check_subset(g, s)
    outside = g.vertices & ~s
    return all(g.adj[v] & outside == 0 for v in iter_members(outside))


class _Search:
    # bounded search tree: does a cover of size <= budget exist that
    # contains `chosen` and avoids `banned`?
    def __init__(self, g: Graph, max_nodes: int):
        self.adj = g.adj
        self.vertices = g.vertices
        self.max_nodes = max_nodes
        self.nodes = 0

    def feasible(self, chosen: VertexSet, banned: VertexSet, budget: int) -> bool:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetError(f"vertex cover search exceeded {self.max_nodes} nodes")
        adj = self.adj
        # neighbors of banned vertices are forced in
        forced = 0
        for v in iter_members(banned):
            forced |= adj[v]
        if forced & banned:
            return False
        chosen |= forced
        if chosen.bit_count() > budget:
            return False
        free = self.vertices & ~chosen & ~banned
        best, best_deg = -1, 0
        edges_left = 0
        for v in iter_members(free):
            d = (adj[v] & free).bit_count()
            edges_left += d
            if d > best_deg:
                best, best_deg = v, d
        if best < 0:
            return True
        left = budget - chosen.bit_count()
        edges_left //= 2
        # each remaining cover vertex removes at most best_deg edges
        if left * best_deg < edges_left:
            return False
        if self.feasible(chosen | 1 << best, banned, budget):
            return True
        return self.feasible(chosen, banned | 1 << best, budget)


def minimum_vertex_cover(g: Graph, max_nodes: int = DEFAULT_COVER_BUDGET) -> VertexCover:
    """A minimum cover; among those, the one with the lexicographically smallest member list."""
    search = _Search(g, max_nodes)
    k = 0
    while not search.feasible(0, 0, k):
        k += 1
    chosen = banned = 0
    for v in range(g.n):
        if search.feasible(chosen | 1 << v, banned, k):
            chosen |= 1 << v
        else:
            banned |= 1 << v
    if not is_vertex_cover(g, chosen) or chosen.bit_count() != k:
        raise InvariantViolation("vertex cover search returned an invalid cover")
    return VertexCover(chosen)


def cover_partition(
    g: Graph,
    vk: VertexCover,
    omega: VertexSet,
    m_graph: bool = False,
    check: bool = True,
) -> CoverPartition:
    """Split the cover by a PMC.

    ``m_graph`` marks ``g`` as an extended graph, where more than three parts
    is an invariant violation instead of an ``OUT_OF_THEORY`` tag.
    """
    _check_subset(g, omega)
    _check_subset(g, vk.cover, "cover")
    if check:
        if not is_vertex_cover(g, vk.cover):
            raise ContractError("cover_partition expects a vertex cover")
        if not is_pmc(g, omega):
            raise ContractError("cover_partition expects a PMC")
    inner = vk.cover & omega
    traces = [c & vk.cover for c, _ in _components(g.adj, g.vertices & ~omega)]
    # parts are disjoint, so the lowest bit orders them by smallest member
    parts = tuple(sorted((t for t in traces if t), key=lambda t: t & -t))
    if m_graph and len(parts) > 3:
        raise InvariantViolation(
            f"PMC {sorted(iter_members(omega))} splits the cover into {len(parts)} parts"
        )
    return CoverPartition(inner, parts, PartitionType.of(bool(inner), len(parts)))


def classify_free_pmcs_by_partition(
    g: Graph,
    vk: VertexCover,
    m_graph: bool = False,
    records: list[PmcRecord] | None = None,
    limit: int | None = None,
) -> dict[CoverPartition, list[VertexSet]]:
    """Group the free PMCs of ``g`` by the exact partition they induce on ``vk``.

    Keys come out in canonical order (inner part, then parts by smallest member).
    """
    if not is_vertex_cover(g, vk.cover):
        raise ContractError("classification expects a vertex cover")
    if records is None:
        records = enumerate_pmcs(g, limit)
    groups: dict[CoverPartition, list[VertexSet]] = {}
    for rec in records:
        if rec.free:
            key = cover_partition(g, vk, rec.omega, m_graph=m_graph, check=False)
            groups.setdefault(key, []).append(rec.omega)
    return dict(sorted(groups.items(), key=lambda item: item[0].sort_key()))


def parse_cover(text: str, g: Graph) -> VertexCover:
    """Parse ``"v1,v2,..."`` into a validated cover of ``g``."""
    try:
        vs = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InputError(f"bad cover list {text!r}") from None
    if any(not 0 <= v < g.n for v in vs):
        raise InputError(f"cover {text!r} has vertices outside 0..{g.n - 1}")
    vk = VertexCover.of(vs)
    if not is_vertex_cover(g, vk.cover):
        raise InputError(f"{text!r} is not a vertex cover")
    return vk
