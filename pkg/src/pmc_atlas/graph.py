"""Immutable simple undirected graphs over vertices ``0..n-1``.

Adjacency is stored as one bitmask per vertex, see :mod:`pmc_atlas.vertexset`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .vertexset import VertexSet, full_set, iter_members, lowest

MAX_VERTICES = 64
WIDE_MAX_VERTICES = 128


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[VertexSet, ...]
    labels: tuple[str, ...] | None = None
    wide: bool = False

    def __post_init__(self):
        limit = WIDE_MAX_VERTICES if self.wide else MAX_VERTICES
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        if self.n > limit:
            hint = "" if self.wide else " (pass wide=True for up to 128)"
            raise InputError(f"{self.n} vertices exceeds the limit of {limit}{hint}")
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError(f"expected {self.n} labels, got {len(self.labels)}")
        everything = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~everything:
                raise InputError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in iter_members(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"adjacency is not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        wide: bool = False,
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels), wide)

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


def _check_subset(g: Graph, x: VertexSet, what: str = "vertex set") -> None:
    if x < 0 or x & ~g.vertices:
        raise InputError(f"{what} contains vertices outside 0..{g.n - 1}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")


def neighborhood_set(g: Graph, x: VertexSet) -> VertexSet:
    """Union of the open neighborhoods of the members of ``x``.

    The result is not reduced by ``x``; subtract it to get the boundary.
    """
    _check_subset(g, x)
    out = 0
    for v in iter_members(x):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v] | 1 << v


def _components(adj: Sequence[VertexSet], rest: VertexSet) -> list[tuple[VertexSet, VertexSet]]:
    # (component, its neighborhood outside itself), ordered by smallest vertex
    out = []
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        reach = 0
        while frontier:
            step = 0
            for v in iter_members(frontier):
                step |= adj[v]
            reach |= step
            frontier = step & rest & ~comp
            comp |= frontier
        out.append((comp, reach & ~comp))
        rest &= ~comp
    return out


def components(g: Graph, removed: VertexSet = 0) -> list[VertexSet]:
    """Connected components of ``g`` minus ``removed``, ordered by smallest vertex."""
    _check_subset(g, removed)
    return [c for c, _ in _components(g.adj, g.vertices & ~removed)]


def induced_subgraph(g: Graph, x: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``x`` renumbered to ``0..|x|-1`` in ascending order.

    Returns the graph and the old-to-new vertex map.
    """
    _check_subset(g, x)
    keep = list(iter_members(x))
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in iter_members(g.adj[old] & x):
            row |= 1 << index[u]
        rows.append(row)
    labels = None if g.labels is None else tuple(g.labels[v] for v in keep)
    wide = g.wide and len(keep) > MAX_VERTICES
    return Graph(len(keep), tuple(rows), labels, wide), index


def is_full_component(g: Graph, x: VertexSet, c: VertexSet) -> bool:
    """True iff component ``c`` of ``g - x`` sees every vertex of ``x``."""
    _check_subset(g, x)
    _check_subset(g, c, "component")
    if not c or c & x:
        raise InputError("not a component of the graph minus x")
    if _grow(g, c, g.vertices & ~x) != c:
        raise InputError("not a component of the graph minus x")
    return neighborhood_set(g, c) & x == x


def _grow(g: Graph, seed: VertexSet, within: VertexSet) -> VertexSet:
    # closure of seed under adjacency inside `within`
    comp = frontier = seed & within
    if comp != seed:
        return -1
    while frontier:
        step = 0
        for v in iter_members(frontier):
            step |= g.adj[v]
        frontier = step & within & ~comp
        comp |= frontier
    # seed must also be connected on its own
    start = 1 << lowest(seed)
    reached = frontier = start
    while frontier:
        step = 0
        for v in iter_members(frontier):
            step |= g.adj[v]
        frontier = step & seed & ~reached
        reached |= frontier
    return comp if reached == seed else -1
