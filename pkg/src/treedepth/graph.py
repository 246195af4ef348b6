"""Undirected simple graphs over dense vertex ids, with vertex sets as int bitmasks.

A vertex set is a plain Python ``int`` whose bit ``v`` is set iff vertex ``v``
belongs to the set.  Python ints are arbitrary precision, so there is no word
size limit; sets over the first 64 vertices simply stay single-word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int


class GraphFormatError(ValueError):
    """Malformed graph text; the message names the offending line."""


def vset(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def members(s: VertexSet) -> list[int]:
    """Vertices of ``s`` in increasing order."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def iter_members(s: VertexSet) -> Iterator[int]:
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def size(s: VertexSet) -> int:
    return s.bit_count()


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor set of ``v``."""

    n: int
    adj: tuple[VertexSet, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        everything = full_set(self.n)
        for v, nb in enumerate(self.adj):
            if nb & ~everything:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def induced(self, s: VertexSet) -> tuple[Graph, list[int]]:
        """Relabelled copy of ``g[s]`` plus the list mapping new ids to old ones."""
        old = members(s)
        index = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            adj.append(vset(index[u] for u in iter_members(self.adj[v] & s)))
        return Graph(len(old), tuple(adj)), old


def neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Open neighborhood N(s): vertices outside ``s`` adjacent to some member."""
    adj = g.adj
    nb = 0
    t = s
    while t:
        low = t & -t
        nb |= adj[low.bit_length() - 1]
        t ^= low
    return nb & ~s


def component_of(g: Graph, s: VertexSet, v: int) -> VertexSet:
    """Vertex set of the component of ``g[s]`` containing ``v``."""
    adj = g.adj
    comp = frontier = 1 << v
    while frontier:
        nb = 0
        while frontier:
            low = frontier & -frontier
            nb |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nb & s & ~comp
        comp |= frontier
    return comp


def components(g: Graph, s: VertexSet) -> list[VertexSet]:
    """Connected components of ``g[s]``, ordered by smallest contained vertex."""
    adj = g.adj
    out = []
    while s:
        comp = frontier = s & -s
        while frontier:
            nb = 0
            while frontier:
                low = frontier & -frontier
                nb |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nb & s & ~comp
            comp |= frontier
        out.append(comp)
        s &= ~comp
    return out


def is_connected(g: Graph, s: VertexSet) -> bool:
    """True iff ``g[s]`` is connected; the empty set is not connected."""
    if not s:
        return False
    return component_of(g, s, lowest(s)) == s


# -- text formats ------------------------------------------------------------


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {' '.join(parts)!r}") from None


def _parse_dimacs(lines: list[str]) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(lines, 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: malformed header {line.strip()!r}")
            n, _ = _ints(parts[2:], lineno)
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line.strip()!r}")
            u, v = _ints(parts[1:], lineno)
            edges.append((u - 1, v - 1, lineno))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    return _build(n, edges, one_based=True)


def _parse_edgelist(lines: list[str]) -> Graph:
    n = None
    edges = []
    seen_content = False
    for lineno, line in enumerate(lines, 1):
        text = line.split("#", 1)[0]
        parts = text.split()
        if not parts:
            continue
        if parts[0] == "n":
            if seen_content or n is not None:
                raise GraphFormatError(f"line {lineno}: 'n' header must be the first line")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: malformed header {line.strip()!r}")
            (n,) = _ints(parts[1:], lineno)
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<u> <v>', got {line.strip()!r}")
        u, v = _ints(parts, lineno)
        edges.append((u, v, lineno))
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    return _build(n, edges, one_based=False)


def _build(n: int, edges: list[tuple[int, int, int]], one_based: bool) -> Graph:
    shift = 1 if one_based else 0
    adj = [0] * n
    for u, v, lineno in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphFormatError(f"line {lineno}: vertex id {w + shift} out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u + shift}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_graph(text: str | bytes, format: str = "dimacs") -> Graph:
    """Parse DIMACS (``p edge n m`` / ``e u v``, 1-based) or a 0-based edge list."""
    if isinstance(text, bytes):
        text = text.decode()
    lines = text.splitlines()
    if format == "dimacs":
        return _parse_dimacs(lines)
    if format == "edgelist":
        return _parse_edgelist(lines)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "dimacs") -> str:
    edges = g.edges()
    if format == "dimacs":
        body = [f"p edge {g.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    elif format == "edgelist":
        body = [f"n {g.n}"] + [f"{u} {v}" for u, v in edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(body) + "\n"


# -- generators ----------------------------------------------------------------


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star(n: int) -> Graph:
    """Star on ``n`` vertices: center 0, leaves 1..n-1 (so K_{1,k} is ``star(k + 1)``)."""
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def grid(rows: int, cols: int) -> Graph:
    _need(rows >= 1 and cols >= 1, "grid needs rows, cols >= 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); identical output for identical ``seed``."""
    _need(n >= 1, "gnp needs n >= 1")
    _need(0.0 <= p <= 1.0, "gnp needs 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "grid": grid,
    "gnp": gnp,
}


def generate(family: str, *args, **kwargs) -> Graph:
    try:
        make = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return make(*args, **kwargs)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise ValueError(message)
