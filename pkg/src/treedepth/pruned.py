"""Pruned dynamic program: tree-depth restricted to the state space.

Components that fall outside the store count as infinitely deep, so the value
of a member is an upper bound on its tree-depth, exact for small members.
"""

from __future__ import annotations

from .forest import ROOT, RootedTree
from .graph import Graph, VertexSet, components
from .states import INF, StateStore


def run_pruned(g: Graph, store: StateStore) -> None:
    """Fill ``store.td`` / ``store.root`` for every member, smallest first."""
    if g.n != store.n:
        raise ValueError("store was built for a different graph size")
    if store.computed:
        raise RuntimeError("pruned values already computed")
    adj = g.adj
    index_get = store._index.get
    td = store.td
    root = store.root
    keys = store.keys
    for layer in store.layers():
        for i in layer:
            x = keys[i]
            if x & (x - 1) == 0:
                td[i] = 1
                root[i] = x.bit_length() - 1
                continue
            best = INF
            best_v = -1
            rest_v = x
            while rest_v:
                low = rest_v & -rest_v
                rest_v ^= low
                remaining = x ^ low
                worst = 0
                # components of x - v, one at a time; stop as soon as v cannot win
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
                    j = index_get(comp, -1)
                    if j == -1:
                        worst = INF
                        break
                    h = td[j]
                    if h > worst:
                        worst = h
                        if worst + 1 >= best:
                            break
                    remaining ^= comp
                if worst + 1 < best:
                    best = worst + 1
                    best_v = low.bit_length() - 1
            td[i] = best
            root[i] = best_v
    store.computed = True


def td_star(store: StateStore, s: VertexSet) -> float:
    """Pruned value of ``s``; ``INF`` when ``s`` is not a member."""
    return store.value(s)


def reconstruct_star(g: Graph, store: StateStore, s: VertexSet) -> RootedTree:
    """Elimination tree of ``g[s]`` following the stored root choices.

    The result has height ``td_star(s)`` and embeds ``g[s]``; raises if the value
    is infinite.
    """
    value = store.value(s)
    if value == INF:
        raise ValueError("no finite pruned value to reconstruct from")
    parents: dict[int, int] = {}
    stack = [(s, ROOT)]
    while stack:
        x, above = stack.pop()
        r = store.chosen_root(x)
        if r < 0:
            raise RuntimeError(f"set {x:#x} has no stored root choice")
        parents[r] = above
        for comp in components(g, x & ~(1 << r)):
            stack.append((comp, r))
    tree = RootedTree(parents)
    if tree.height != value:
        raise RuntimeError(f"reconstructed height {tree.height} != stored value {value}")
    return tree
