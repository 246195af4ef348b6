"""Brute-force ground truth for tiny graphs.

Everything here enumerates the raw search space (every parent function, every
ordering) so that it shares no logic with the fast solvers it certifies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .forest import ROOT, RootedTree, level_sequence, prec, subtree
from .graph import Graph, VertexSet, is_connected
from .moid import MoidInstance, MoidSolution, mu
from .naive import CapExceeded

MAX_TREE_N = 8
MAX_PROPERTY_N = 7
MAX_MOID_Z = 8


@dataclass
class MinimalTreeReport:
    graph: Graph
    minimal_trees: list[RootedTree]
    td: int


def _require_connected(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(f"oracle limited to {cap} vertices, got {g.n}")
    if not is_connected(g, g.vertices):
        raise ValueError("oracle needs a connected graph")


def enumerate_embeddable_trees(g: Graph) -> Iterator[RootedTree]:
    """Every rooted labelled tree on ``V(g)`` whose closure contains ``g``, once each."""
    _require_connected(g, MAX_TREE_N)
    n = g.n
    edges = g.edges()
    for root in range(n):
        others = [v for v in range(n) if v != root]
        choices = [[p for p in range(n) if p != v] for v in others]
        for picks in itertools.product(*choices):
            parent = [ROOT] * n
            for v, p in zip(others, picks):
                parent[v] = p
            anc = _ancestor_masks(parent, root)
            if anc is None:
                continue
            if all(anc[v] >> u & 1 or anc[u] >> v & 1 for u, v in edges):
                yield RootedTree.from_parent_array(parent)


def _ancestor_masks(parent: list[int], root: int) -> list[int] | None:
    """Strict-ancestor bitmask per vertex, or None if some vertex never reaches ``root``."""
    n = len(parent)
    anc: list[int | None] = [None] * n
    anc[root] = 0
    for v in range(n):
        chain = []
        u = v
        while anc[u] is None:
            chain.append(u)
            if len(chain) > n:
                return None
            u = parent[u]
        for w in reversed(chain):
            p = parent[w]
            anc[w] = anc[p] | 1 << p
    return anc


def minimal_trees(g: Graph) -> MinimalTreeReport:
    """Embeddable trees with no embeddable tree below them in the level order."""
    trees = list(enumerate_embeddable_trees(g))
    seqs = [level_sequence(t) for t in trees]
    distinct = set(seqs)
    minimal_seqs = {a for a in distinct if not any(prec(b, a) for b in distinct)}
    chosen = [t for t, s in zip(trees, seqs) if s in minimal_seqs]
    td = min(t.height for t in trees)
    for t in chosen:
        if t.height != td:
            raise AssertionError(f"minimal tree of height {t.height} exceeds td {td}")
    return MinimalTreeReport(g, chosen, td)


def check_minimal_tree_properties(g: Graph) -> list[str]:
    """Check the structure of every minimal tree of ``g``; returns violation messages.

    For each minimal tree and vertex ``v``: the subtree at ``v`` induces a
    connected subgraph, is itself minimal for that subgraph, and ``v`` has a
    neighbor inside every child subtree of the first branching vertex at or
    below ``v``.
    """
    _require_connected(g, MAX_PROPERTY_N)
    report = minimal_trees(g)
    best_seq: dict[VertexSet, tuple[int, ...]] = {}
    violations = []
    for t in report.minimal_trees:
        for v in sorted(t.parents):
            sub, verts = subtree(t, v)
            if not is_connected(g, verts):
                violations.append(f"{t!r}: subtree at {v} is not connected in g")
                continue
            if verts not in best_seq:
                h, _ = g.induced(verts)
                best_seq[verts] = level_sequence(minimal_trees(h).minimal_trees[0])
            if prec(best_seq[verts], level_sequence(sub)):
                violations.append(f"{t!r}: subtree at {v} is not minimal for its vertex set")
            branch = v
            while len(t.children[branch]) == 1:
                branch = t.children[branch][0]
            for u in t.children[branch] if len(t.children[branch]) >= 2 else []:
                _, below = subtree(t, u)
                if not g.adj[v] & below:
                    violations.append(
                        f"{t!r}: {v} has no neighbor below child {u} of branching vertex {branch}"
                    )
    return violations


def exhaustive_moid(inst: MoidInstance) -> MoidSolution:
    """Best ordering by trying all of them; ties go to the lexicographically first."""
    k = len(inst.z)
    if k > MAX_MOID_Z:
        raise CapExceeded(f"exhaustive ordering limited to {MAX_MOID_Z} elements, got {k}")
    best = None
    for positions in itertools.permutations(range(1, k + 1)):
        sigma = dict(zip(inst.z, positions))
        value = mu(inst, sigma)
        if best is None or value < best.mu:
            best = MoidSolution(sigma, value)
    return best
