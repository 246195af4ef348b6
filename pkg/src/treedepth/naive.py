"""Exact tree-depth by memoized recursion over connected vertex subsets.

td(S) = 1 for a single vertex, otherwise 1 + min over v in S of the largest
td over the components of S - v.  Only subsets reachable by vertex deletions
from the input set are ever materialized.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable

from .forest import ROOT, RootedTree
from .graph import Graph, VertexSet, components, is_connected
from .pruned import reconstruct_star
from .states import INF, StateStore

DEFAULT_MAX_N_NAIVE = 26


class CapExceeded(ValueError):
    """An input is larger than the configured size cap of an exhaustive routine."""


@dataclass
class NaiveTable:
    """Memo: vertex set -> (tree-depth, chosen root)."""

    entries: dict[VertexSet, tuple[int, int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, s: VertexSet) -> bool:
        return s in self.entries


def td_naive(
    g: Graph,
    s: VertexSet | None = None,
    table: NaiveTable | None = None,
    reuse: StateStore | None = None,
    max_n: int = DEFAULT_MAX_N_NAIVE,
) -> int:
    """Tree-depth of ``g[s]`` (default: all of ``g``), which must be connected.

    With ``reuse`` given, sets no larger than the store's small-set threshold are
    read from the store instead of being recomputed; those values are exact.
    The chosen root of every entry is the smallest vertex attaining the minimum.
    """
    s = g.vertices if s is None else s
    if not s:
        raise ValueError("vertex set is empty")
    if not is_connected(g, s):
        raise ValueError("vertex set does not induce a connected subgraph")
    if s.bit_count() > max_n:
        raise CapExceeded(
            f"naive DP limited to {max_n} vertices (got {s.bit_count()}); use the full algorithm"
        )
    if reuse is not None and not reuse.computed:
        raise ValueError("reuse store has no computed values")
    table = NaiveTable() if table is None else table
    if sys.getrecursionlimit() < 4 * g.n + 100:
        sys.setrecursionlimit(4 * g.n + 100)
    return _solve(g.adj, s, table.entries, reuse)


def _solve(adj, s, entries, reuse):
    limit = reuse.threshold if reuse is not None else -1
    index_get = reuse._index.get if reuse is not None else None
    reuse_td = reuse.td if reuse is not None else None

    def rec(x: int) -> int:
        hit = entries.get(x)
        if hit is not None:
            return hit[0]
        if x.bit_count() <= limit:
            j = index_get(x, -1)
            if j == -1 or reuse_td[j] == INF:
                raise RuntimeError(f"small connected set {x:#x} missing from the reuse store")
            return reuse_td[j]
        if x & (x - 1) == 0:
            entries[x] = (1, x.bit_length() - 1)
            return 1
        best = INF
        best_v = -1
        rest_v = x
        while rest_v:
            low = rest_v & -rest_v
            rest_v ^= low
            remaining = x ^ low
            worst = 0
            while remaining:
                comp = frontier = remaining & -remaining
                while frontier:
                    nb = 0
                    while frontier:
                        b = frontier & -frontier
                        nb |= adj[b.bit_length() - 1]
                        frontier ^= b
                    frontier = nb & remaining & ~comp
                    comp |= frontier
                h = rec(comp)
                if h > worst:
                    worst = h
                remaining ^= comp
            if worst + 1 < best:
                best = worst + 1
                best_v = low.bit_length() - 1
        entries[x] = (best, best_v)
        return best

    return rec(s)


def reconstruct_naive(
    g: Graph, s: VertexSet, table: NaiveTable, reuse: StateStore | None = None
) -> RootedTree:
    """Elimination tree of ``g[s]`` from the recorded root choices."""
    parents: dict[int, int] = {}
    stack = [(s, ROOT)]
    while stack:
        x, above = stack.pop()
        hit = table.entries.get(x)
        if hit is None:
            if reuse is None or x.bit_count() > reuse.threshold:
                raise KeyError(f"no table entry for vertex set {x:#x}")
            sub = reconstruct_star(g, reuse, x)
            for v, p in sub.parents.items():
                parents[v] = above if p == ROOT else p
            continue
        r = hit[1]
        parents[r] = above
        for comp in components(g, x & ~(1 << r)):
            stack.append((comp, r))
    return RootedTree(parents)


def treedepth_disconnected(g: Graph, solver: Callable[[Graph], int] | None = None) -> int:
    """Largest tree-depth over the components of ``g``; 0 for the empty graph.

    ``solver`` is applied to each component (relabelled to ``0..k-1``) and
    defaults to the naive DP.
    """
    if g.n == 0:
        return 0
    solver = solver or td_naive
    return max(solver(g.induced(comp)[0]) for comp in components(g, g.vertices))
