"""Graph families and explicit PMC constructions.

* ``build_M`` extends a graph with one vertex ``M_X`` adjacent to exactly
  ``X`` for every non-empty subset ``X`` of a vertex cover.
* ``build_Gk`` is the incidence graph of ``{1..k}`` against its 2-subsets.
* ``pmc_from_tripartition`` and ``lift_free_pmc`` produce free PMCs of
  ``G_k`` without enumeration.

Integers of ``G_k`` are 1-indexed in labels and arguments; vertex ``i - 1``
carries integer ``i``, and the pair vertices follow in lexicographic order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .cover import VertexCover, is_vertex_cover
from .errors import BudgetError, ContractError, InputError
from .graph import MAX_VERTICES, WIDE_MAX_VERTICES, Graph
from .pmc import is_free, is_pmc
from .vertexset import VertexSet, iter_members, vset

DEFAULT_M_CAP = 16


@dataclass(frozen=True)
class MGraph:
    base: Graph
    graph: Graph
    inner: VertexSet
    outer_index: dict[VertexSet, int] = field(hash=False, compare=False)
    is_m_graph: bool = True

    @property
    def cover(self) -> VertexCover:
        return VertexCover(self.inner)

    @property
    def k(self) -> int:
        return self.inner.bit_count()

    @property
    def original(self) -> VertexSet:
        return (1 << self.base.n) - 1

    def outer(self) -> VertexSet:
        return self.graph.vertices & ~self.inner


def build_M(g: Graph, vk: VertexCover, cap: int = DEFAULT_M_CAP, wide: bool = False) -> MGraph:
    """Add ``M_X`` for every non-empty ``X`` within the cover, in ascending mask order of ``X``.

    ``M_X`` is indexed by ``X`` written as a mask over the original vertices.
    """
    if not is_vertex_cover(g, vk.cover) or vk.cover & ~g.vertices:
        raise InputError("build_M needs a vertex cover of the base graph")
    k = vk.k
    if k > cap:
        raise BudgetError(f"cover size {k} exceeds the cap {cap} (2^k vertices are added)")
    n_total = g.n + (1 << k) - 1
    limit = WIDE_MAX_VERTICES if wide else MAX_VERTICES
    if n_total > limit:
        raise BudgetError(f"M graph would have {n_total} vertices, over the limit {limit}")
    cover = list(iter_members(vk.cover))
    rows = list(g.adj) + [0] * ((1 << k) - 1)
    labels = list(g.labels) if g.labels is not None else [str(v) for v in range(g.n)]
    outer_index = {}
    for sub in range(1, 1 << k):
        x = vset(cover[b] for b in range(k) if sub >> b & 1)
        vid = g.n + sub - 1
        outer_index[x] = vid
        rows[vid] = x
        for u in iter_members(x):
            rows[u] |= 1 << vid
        labels.append("M_{" + ",".join(labels[u] for u in iter_members(x)) + "}")
    graph = Graph(n_total, tuple(rows), tuple(labels), wide=wide and n_total > MAX_VERTICES)
    return MGraph(g, graph, vk.cover, outer_index)


@dataclass(frozen=True)
class GkGraph:
    k: int
    graph: Graph
    integer_vertices: VertexSet
    pair_index: dict[tuple[int, int], int] = field(hash=False, compare=False)

    def vertex(self, i: int) -> int:
        """Vertex id of integer ``i`` (1-indexed)."""
        if not 1 <= i <= self.k:
            raise InputError(f"integer {i} outside 1..{self.k}")
        return i - 1

    def pair(self, i: int, j: int) -> int:
        return self.pair_index[(min(i, j), max(i, j))]

    def integers_in(self, s: VertexSet) -> set[int]:
        return {v + 1 for v in iter_members(s & self.integer_vertices)}

    def prefix(self, i: int) -> VertexSet:
        """Vertex set of the integers ``1..i``."""
        return (1 << i) - 1

    @property
    def cover(self) -> VertexCover:
        return VertexCover(self.integer_vertices)


def build_Gk(k: int, wide: bool = False) -> GkGraph:
    if k < 1:
        raise InputError("G_k needs k >= 1")
    n = k + k * (k - 1) // 2
    limit = WIDE_MAX_VERTICES if wide else MAX_VERTICES
    if n > limit:
        raise BudgetError(f"G_{k} has {n} vertices, over the limit {limit}")
    pair_index = {}
    edges = []
    labels = [str(i) for i in range(1, k + 1)]
    for vid, (i, j) in enumerate(combinations(range(1, k + 1), 2), start=k):
        pair_index[(i, j)] = vid
        edges += [(vid, i - 1), (vid, j - 1)]
        labels.append(f"({i},{j})")
    graph = Graph.from_edges(n, edges, labels, wide=wide and n > MAX_VERTICES)
    return GkGraph(k, graph, (1 << k) - 1, pair_index)


def build_star(n: int) -> Graph:
    if n < 2:
        raise InputError("a star needs at least 2 vertices")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def _check_tripartition(k: int, parts: Sequence[Iterable[int]]) -> list[set[int]]:
    sets = [set(p) for p in parts]
    if len(sets) != 3 or any(not p for p in sets):
        raise InputError("need exactly three non-empty parts")
    union = set().union(*sets)
    if sum(map(len, sets)) != len(union) or union != set(range(1, k + 1)):
        raise InputError(f"parts must be disjoint and cover 1..{k}")
    return sets


def pmc_from_tripartition(gk: GkGraph, parts: Sequence[Iterable[int]]) -> VertexSet:
    """Pair vertices whose two integers fall in different parts."""
    sets = _check_tripartition(gk.k, parts)
    where = {i: t for t, p in enumerate(sets) for i in p}
    return vset(vid for (i, j), vid in gk.pair_index.items() if where[i] != where[j])


def tripartitions(k: int) -> list[tuple[tuple[int, ...], ...]]:
    """All partitions of ``1..k`` into three non-empty blocks, blocks ordered by least element."""
    out = []

    def grow(i, blocks):
        if i > k:
            if len(blocks) == 3:
                out.append(tuple(tuple(b) for b in blocks))
            return
        # too few integers left to open the missing blocks
        if k - i + 1 < 3 - len(blocks):
            return
        for b in blocks:
            b.append(i)
            grow(i + 1, blocks)
            b.pop()
        if len(blocks) < 3:
            blocks.append([i])
            grow(i + 1, blocks)
            blocks.pop()

    grow(1, [])
    return out


def _embed(prev: GkGraph, gk: GkGraph, s: VertexSet) -> VertexSet:
    # G_{k-1} sits inside G_k on the same integers and pairs
    out = s & prev.integer_vertices
    for (i, j), vid in prev.pair_index.items():
        if s >> vid & 1:
            out |= 1 << gk.pair(i, j)
    return out


def permute_integers(gk: GkGraph, s: VertexSet, perm: dict[int, int]) -> VertexSet:
    """Image of ``s`` under a permutation of ``1..k`` acting on integers and pairs."""
    pairs = {vid: ij for ij, vid in gk.pair_index.items()}
    out = 0
    for v in iter_members(s):
        if v < gk.k:
            out |= 1 << gk.vertex(perm.get(v + 1, v + 1))
        else:
            i, j = pairs[v]
            out |= 1 << gk.pair(perm.get(i, i), perm.get(j, j))
    return out


@dataclass(frozen=True)
class Lift:
    """``omega`` meets the integers in ``1..i-1`` plus ``k``; ``permuted`` in ``1..i``."""

    omega: VertexSet
    permutation: dict[int, int]
    permuted: VertexSet


def lift_free_pmc(gk: GkGraph, omega_prev: VertexSet, i: int) -> Lift:
    """Add integer ``k`` to a free PMC of ``G_{k-1}`` meeting the integers in ``1..i-1``."""
    k = gk.k
    if k < 2 or not 1 <= i <= k:
        raise InputError(f"need k >= 2 and 1 <= i <= k, got k={k}, i={i}")
    prev = build_Gk(k - 1, wide=gk.graph.wide)
    if omega_prev & ~prev.graph.vertices:
        raise ContractError("omega_prev is not a vertex set of G_{k-1}")
    if not is_pmc(prev.graph, omega_prev) or not is_free(prev.graph, omega_prev, check=False):
        raise ContractError("omega_prev must be a free PMC of G_{k-1}")
    if omega_prev & prev.integer_vertices != prev.prefix(i - 1):
        raise ContractError(f"omega_prev must meet the integers in exactly 1..{i - 1}")
    omega = _embed(prev, gk, omega_prev) | 1 << gk.vertex(k)
    perm = {k: i, i: k} if i != k else {}
    return Lift(omega, perm, permute_integers(gk, omega, perm))


def constructed_free_pmcs(k: int, i: int) -> list[VertexSet]:
    """Free PMCs of ``G_k`` meeting the integers in ``1..i``, built by tripartitions and lifts."""
    if i < 0 or i > k:
        raise InputError(f"need 0 <= i <= k, got i={i}")
    if k - i < 3:
        return []
    gk = build_Gk(k)
    if i == 0:
        return [pmc_from_tripartition(gk, p) for p in tripartitions(k)]
    return [lift_free_pmc(gk, prev, i).permuted for prev in constructed_free_pmcs(k - 1, i - 1)]


def random_graph_with_cover(
    k: int, n: int, edge_prob: float | Fraction | str, seed: int
) -> tuple[Graph, VertexCover]:
    """Random graph in which vertices ``0..k-1`` cover every edge.

    Each pair with at least one endpoint below ``k`` becomes an edge with
    probability ``edge_prob``; the draw order is fixed, so a seed pins the graph.
    """
    p = Fraction(edge_prob)
    if not 0 <= k <= n:
        raise InputError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= p <= 1:
        raise InputError(f"edge probability {edge_prob} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(k) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges), VertexCover((1 << k) - 1)
