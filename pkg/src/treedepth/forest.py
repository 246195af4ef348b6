"""Rooted trees as elimination trees: heights, closures, embedding and the level order.

Trees keep the original graph's vertex ids, so the tree of a subgraph ``g[s]``
is a ``RootedTree`` whose vertex set is ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .graph import Graph, VertexSet, iter_members, vset

ROOT = -1

LevelSequence = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class RootedTree:
    """``parents[v]`` is the parent of ``v``; the root maps to ``ROOT``."""

    parents: Mapping[int, int] = field(repr=False)

    def __post_init__(self):
        roots = [v for v, p in self.parents.items() if p == ROOT]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        for v, p in self.parents.items():
            if p != ROOT and p not in self.parents:
                raise ValueError(f"parent {p} of {v} is not a tree vertex")
        # every vertex must reach the root; heights() walks parent chains and
        # catches cycles
        self.heights

    def __eq__(self, other):
        return isinstance(other, RootedTree) and dict(self.parents) == dict(other.parents)

    def __hash__(self):
        return hash(frozenset(self.parents.items()))

    def __repr__(self):
        return f"RootedTree(root={self.root}, parents={dict(sorted(self.parents.items()))})"

    @classmethod
    def from_parent_array(cls, parent: Sequence[int]) -> RootedTree:
        return cls({v: p for v, p in enumerate(parent)})

    @classmethod
    def path(cls, order: Sequence[int]) -> RootedTree:
        """Path tree with ``order[0]`` as root."""
        parents = {order[0]: ROOT}
        for a, b in zip(order, order[1:]):
            parents[b] = a
        return cls(parents)

    @cached_property
    def root(self) -> int:
        return next(v for v, p in self.parents.items() if p == ROOT)

    @cached_property
    def vertex_set(self) -> VertexSet:
        return vset(self.parents)

    @property
    def n(self) -> int:
        return len(self.parents)

    @cached_property
    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in self.parents}
        for v in sorted(self.parents):
            p = self.parents[v]
            if p != ROOT:
                kids[p].append(v)
        return kids

    @cached_property
    def heights(self) -> dict[int, int]:
        h: dict[int, int] = {}
        limit = len(self.parents)
        for v in self.parents:
            chain = []
            u = v
            while u not in h:
                chain.append(u)
                if len(chain) > limit:
                    raise ValueError("parent pointers contain a cycle")
                p = self.parents[u]
                if p == ROOT:
                    h[u] = 1
                    chain.pop()
                    break
                u = p
            for w in reversed(chain):
                h[w] = h[self.parents[w]] + 1
        return h

    @property
    def height(self) -> int:
        return max(self.heights.values())

    @cached_property
    def ancestors(self) -> dict[int, VertexSet]:
        """Strict ancestors of each vertex as a bitmask."""
        anc: dict[int, VertexSet] = {}
        for v in sorted(self.parents, key=self.heights.__getitem__):
            p = self.parents[v]
            anc[v] = 0 if p == ROOT else anc[p] | 1 << p
        return anc

    @cached_property
    def descendants(self) -> dict[int, VertexSet]:
        """Strict descendants of each vertex as a bitmask."""
        desc: dict[int, VertexSet] = {v: 0 for v in self.parents}
        for v in sorted(self.parents, key=self.heights.__getitem__, reverse=True):
            p = self.parents[v]
            if p != ROOT:
                desc[p] |= desc[v] | 1 << v
        return desc

    def parent_array(self, n: int | None = None) -> list[int | None]:
        """Parent per vertex id in ``0..n-1``; ``None`` for ids outside the tree."""
        n = max(self.parents) + 1 if n is None else n
        return [self.parents.get(v) for v in range(n)]


def height_of(t: RootedTree, v: int) -> int:
    return t.heights[v]


def closure(t: RootedTree, n: int | None = None) -> Graph:
    """Graph joining every vertex to each of its strict ancestors."""
    n = max(t.parents) + 1 if n is None else n
    return Graph.from_edges(n, ((a, v) for v, anc in t.ancestors.items() for a in iter_members(anc)))


def embeds(g: Graph, t: RootedTree, within: VertexSet | None = None) -> bool:
    """True iff every edge of ``g[within]`` joins an ancestor-descendant pair of ``t``.

    ``within`` defaults to all of ``V(g)`` and must equal the tree's vertex set.
    """
    within = g.vertices if within is None else within
    if t.vertex_set != within:
        raise ValueError("tree vertex set does not match the graph vertex set")
    return first_violation(g, t, within) is None


def first_violation(g: Graph, t: RootedTree, within: VertexSet | None = None) -> tuple[int, int] | None:
    """Smallest edge ``(u, v)`` of ``g[within]`` not covered by the closure of ``t``."""
    within = g.vertices if within is None else within
    anc, desc = t.ancestors, t.descendants
    for v in sorted(t.parents):
        bad = g.adj[v] & within & ~(anc[v] | desc[v])
        if bad:
            u = (bad & -bad).bit_length() - 1
            return (min(u, v), max(u, v))
    return None


def level_sequence(t: RootedTree) -> LevelSequence:
    counts = [0] * t.height
    for h in t.heights.values():
        counts[h - 1] += 1
    return tuple(counts)


def prec(a: Sequence[int], b: Sequence[int]) -> bool:
    """Level order: the highest level where the counts differ has fewer vertices in ``a``."""
    for i in range(max(len(a), len(b)) - 1, -1, -1):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return x < y
    return False


def subtree(t: RootedTree, v: int) -> tuple[RootedTree, VertexSet]:
    """The maximal subtree rooted at ``v`` and its vertex set."""
    verts = t.descendants[v] | 1 << v
    parents = {u: t.parents[u] for u in iter_members(verts)}
    parents[v] = ROOT
    return RootedTree(parents), verts


def assemble(
    z_order: Sequence[int],
    attachments: Iterable[tuple[RootedTree, int]],
    n: int | None = None,
) -> RootedTree:
    """Path on ``z_order`` (first element is the root) with each attached tree's root
    hung below ``z_order[index - 1]``.

    With ``n`` given the pieces must cover ``0..n-1`` exactly.
    """
    if not z_order:
        raise ValueError("z_order must be nonempty")
    parents = {z_order[0]: ROOT}
    for a, b in zip(z_order, z_order[1:]):
        if b in parents:
            raise ValueError(f"vertex {b} repeated in z_order")
        parents[b] = a
    for tree, index in attachments:
        if not 1 <= index <= len(z_order):
            raise ValueError(f"attach index {index} outside [1, {len(z_order)}]")
        for v, p in tree.parents.items():
            if v in parents:
                raise ValueError(f"vertex {v} appears twice")
            parents[v] = z_order[index - 1] if p == ROOT else p
    if n is not None and set(parents) != set(range(n)):
        missing = sorted(set(range(n)) - set(parents))
        raise ValueError(f"pieces do not cover all vertices; missing {missing}")
    return RootedTree(parents)


# -- forests (only for disconnected top-level inputs) ------------------------------


def forest_from_parent_array(parent: Sequence[int]) -> list[RootedTree]:
    """Split a parent array with one or more ``-1`` roots into its trees."""
    n = len(parent)
    for v, p in enumerate(parent):
        if p != ROOT and not 0 <= p < n:
            raise ValueError(f"parent {p} of vertex {v} out of range")
    root_of: dict[int, int] = {}
    for v in range(n):
        chain = []
        u = v
        while u not in root_of and parent[u] != ROOT:
            chain.append(u)
            if len(chain) > n:
                raise ValueError("parent pointers contain a cycle")
            u = parent[u]
        r = root_of.get(u, u)
        root_of[u] = r
        for w in chain:
            root_of[w] = r
    groups: dict[int, dict[int, int]] = {}
    for v in range(n):
        groups.setdefault(root_of[v], {})[v] = parent[v]
    return [RootedTree(groups[r]) for r in sorted(groups)]


def forest_parent_array(trees: Iterable[RootedTree], n: int) -> list[int]:
    parent = [None] * n
    for t in trees:
        for v, p in t.parents.items():
            parent[v] = p
    if any(p is None for p in parent):
        raise ValueError("forest does not cover all vertices")
    return parent


def forest_height(trees: Iterable[RootedTree]) -> int:
    return max((t.height for t in trees), default=0)


def forest_first_violation(g: Graph, trees: Sequence[RootedTree]) -> tuple[int, int] | None:
    covered = 0
    for t in trees:
        if covered & t.vertex_set:
            raise ValueError("forest trees overlap")
        covered |= t.vertex_set
    if covered != g.vertices:
        raise ValueError("forest vertex set does not match the graph")
    # edges between different trees are never covered
    found = [e for t in trees if (e := first_violation(g, t, t.vertex_set)) is not None]
    for t in trees:
        s = t.vertex_set
        for v in iter_members(s):
            out = g.adj[v] & ~s
            if out:
                u = (out & -out).bit_length() - 1
                found.append((min(u, v), max(u, v)))
    return min(found) if found else None


def to_dot(trees: RootedTree | Iterable[RootedTree], name: str = "T") -> str:
    """DOT digraph with parent -> child edges; roots drawn as double circles."""
    if isinstance(trees, RootedTree):
        trees = [trees]
    lines = [f"digraph {name} {{"]
    for t in trees:
        lines.append(f'  {t.root} [label="{t.root}", shape=doublecircle, root=true];')
        for v in sorted(t.parents):
            if v != t.root:
                lines.append(f'  {v} [label="{v}"];')
        for v in sorted(t.parents):
            p = t.parents[v]
            if p != ROOT:
                lines.append(f"  {p} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
