"""Reading and writing graphs as edge lists and graph6 strings.

Edge-list format: a header line ``"n m"`` followed by ``m`` lines ``"u v"``
with ``0 <= u, v < n`` and ``u != v``.  Duplicate edges are collapsed.
"""
from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import MAX_VERTICES, Graph


def _ints(line: str, lineno: int, count: int) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {line!r}", lineno) from None


def parse_edge_list(text: str, wide: bool = False) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("missing header line", 1)
    n, m = _ints(lines[0], 1, 2)
    if n < 0 or m < 0:
        raise ParseError("negative vertex or edge count", 1)
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(lines) - 1} edge lines", 1)
    edges = set()
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge ({u}, {v}) for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    try:
        return Graph.from_edges(n, sorted(edges), wide=wide or n > MAX_VERTICES)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _graph6_size(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise ValueError("graph6 size field supports n <= 258047 here")


def to_graph6(g: Graph) -> str:
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [int("".join(map(str, bits[p:p + 6])), 2) for p in range(0, len(bits), 6)]
    return "".join(chr(63 + c) for c in _graph6_size(g.n) + chunks)


def parse_graph6(text: str, wide: bool = False) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError("graph6 characters must lie in the range '?'..'~'")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ParseError("unsupported graph6 size field")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    bits = [(d >> (5 - b)) & 1 for d in body for b in range(6)]
    if any(bits[need:]):
        raise ParseError("nonzero padding bits in graph6 string")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    try:
        return Graph.from_edges(n, edges, wide=wide or n > MAX_VERTICES)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def read_graph(path: str | Path) -> Graph:
    """Load a graph file; ``.g6``/``.graph6`` files are graph6, others edge lists."""
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".g6", ".graph6"):
        return parse_graph6(text)
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix in (".g6", ".graph6"):
        path.write_text(to_graph6(g) + "\n")
    else:
        path.write_text(serialize_edge_list(g))
