"""The pruned state space: small connected sets plus components left by deleting a small set.

A set ``S`` is a member when ``g[S]`` is connected and either ``|S|`` is at most
``floor((1/2 - eps) n)`` ("first type") or ``S`` is the vertex set of a connected
component of ``g - X`` for some ``X`` of at most that size ("second type").
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from fractions import Fraction
from typing import BinaryIO, Iterator

from .graph import Graph, VertexSet, components, full_set, is_connected

INF = math.inf

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Epsilon:
    """Exact rational epsilon with ``0 < eps < 1/6``."""

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0 or self.num <= 0:
            raise ValueError(f"epsilon must be a positive fraction, got {self.num}/{self.den}")
        if not self.value < Fraction(1, 6):
            raise ValueError(f"epsilon must be below 1/6, got {self.num}/{self.den}")

    @classmethod
    def parse(cls, text: str | Fraction | Epsilon) -> Epsilon:
        if isinstance(text, Epsilon):
            return text
        try:
            f = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse epsilon {text!r}; use 'num/den'") from None
        return cls(f.numerator, f.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self):
        return f"{self.num}/{self.den}"

    def small_limit(self, n: int) -> int:
        """Largest size ``k`` with ``k <= (1/2 - eps) n``."""
        return math.floor((HALF - self.value) * n)


DEFAULT_EPSILON = Epsilon(1, 10)


class BitTrie:
    """Binary prefix tree over ``n``-bit keys, highest vertex first.

    Maps each key to a slot number; inserting an existing key returns its old slot.
    """

    def __init__(self, n: int):
        self.n = n
        self._zero = [-1]
        self._one = [-1]
        self._slot = [-1]
        self._count = 0

    def insert(self, key: VertexSet, slot: int) -> int:
        zero, one = self._zero, self._one
        node = 0
        for bit in range(self.n - 1, -1, -1):
            branch = one if key >> bit & 1 else zero
            nxt = branch[node]
            if nxt == -1:
                nxt = len(zero)
                zero.append(-1)
                one.append(-1)
                self._slot.append(-1)
                branch[node] = nxt
            node = nxt
        if self._slot[node] == -1:
            self._slot[node] = slot
            self._count += 1
        return self._slot[node]

    def get(self, key: VertexSet, default: int = -1) -> int:
        if key >> self.n:
            return default
        zero, one = self._zero, self._one
        node = 0
        for bit in range(self.n - 1, -1, -1):
            node = one[node] if key >> bit & 1 else zero[node]
            if node == -1:
                return default
        slot = self._slot[node]
        return default if slot == -1 else slot

    def setdefault(self, key: VertexSet, slot: int) -> int:
        return self.insert(key, slot)

    def __contains__(self, key: VertexSet) -> bool:
        return self.get(key) != -1

    def __len__(self) -> int:
        return self._count


class StateStore:
    """Members of the state space with their pruned tree-depth values.

    ``td`` holds 0 until the pruned DP runs, then a positive int or ``INF``;
    ``root`` holds the chosen top vertex (or -1).
    """

    def __init__(self, n: int, eps: Epsilon, backend: str = "dict"):
        self.n = n
        self.eps = eps
        self.threshold = eps.small_limit(n)
        if backend == "dict":
            self._index: dict[int, int] | BitTrie = {}
        elif backend == "trie":
            self._index = BitTrie(n)
        else:
            raise ValueError(f"unknown store backend {backend!r}")
        self.backend = backend
        self.keys: list[VertexSet] = []
        self.td: list[float] = []
        self.root: list[int] = []
        self.computed = False
        self._layers: list[list[int]] | None = None

    def add(self, s: VertexSet) -> bool:
        """Insert ``s``; returns False when it was already present."""
        slot = self._index.setdefault(s, len(self.keys))
        if slot != len(self.keys):
            return False
        self.keys.append(s)
        self.td.append(0)
        self.root.append(-1)
        self._layers = None
        return True

    def slot(self, s: VertexSet) -> int:
        return self._index.get(s, -1)

    def __contains__(self, s: VertexSet) -> bool:
        return self._index.get(s, -1) != -1

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.keys)

    def layers(self) -> list[list[int]]:
        """Slots grouped by cardinality; each layer sorted by bit pattern."""
        if self._layers is None:
            layers: list[list[int]] = [[] for _ in range(self.n + 1)]
            for i, s in enumerate(self.keys):
                layers[s.bit_count()].append(i)
            keys = self.keys
            for layer in layers:
                layer.sort(key=keys.__getitem__)
            self._layers = layers
        return self._layers

    def value(self, s: VertexSet) -> float:
        """Pruned value of ``s``; ``INF`` for non-members."""
        i = self._index.get(s, -1)
        if i == -1:
            return INF
        if not self.computed:
            raise RuntimeError("pruned values not computed yet")
        return self.td[i]

    def chosen_root(self, s: VertexSet) -> int:
        i = self._index.get(s, -1)
        return -1 if i == -1 else self.root[i]

    # -- binary dump ---------------------------------------------------------

    _HEADER = struct.Struct("<4sIIIQ")
    _MAGIC = b"TDSS"
    _TD_UNSET = 0
    _TD_INF = 0xFFFFFFFF

    def dump(self, fh: BinaryIO) -> None:
        fh.write(self._HEADER.pack(self._MAGIC, self.n, self.eps.num, self.eps.den, len(self.keys)))
        width = max(1, (self.n + 7) // 8)
        tail = struct.Struct("<Ii")
        for s, td, root in zip(self.keys, self.td, self.root):
            code = self._TD_INF if td == INF else int(td)
            fh.write(s.to_bytes(width, "little"))
            fh.write(tail.pack(code, root))

    @classmethod
    def load(cls, fh: BinaryIO, backend: str = "dict") -> StateStore:
        magic, n, num, den, count = cls._HEADER.unpack(fh.read(cls._HEADER.size))
        if magic != cls._MAGIC:
            raise ValueError("not a state store dump")
        store = cls(n, Epsilon(num, den), backend)
        width = max(1, (n + 7) // 8)
        tail = struct.Struct("<Ii")
        for _ in range(count):
            s = int.from_bytes(fh.read(width), "little")
            code, root = tail.unpack(fh.read(tail.size))
            store.add(s)
            store.td[-1] = INF if code == cls._TD_INF else code
            store.root[-1] = root
        store.computed = count > 0 and all(td != cls._TD_UNSET for td in store.td)
        return store


def subsets_up_to(n: int, k_max: int) -> Iterator[VertexSet]:
    """Every subset of ``0..n-1`` with at most ``k_max`` elements, by size then value."""
    limit = 1 << n
    for k in range(0, min(k_max, n) + 1):
        if k == 0:
            yield 0
            continue
        x = (1 << k) - 1
        while x < limit:
            yield x
            low = x & -x
            r = x + low
            x = (((r ^ x) >> 2) // low) | r


def enumerate_states(g: Graph, eps: Epsilon = DEFAULT_EPSILON, backend: str = "dict") -> StateStore:
    """Build the state space by one sweep over all small sets ``X``.

    Each ``X`` is a first-type candidate (kept when nonempty and connected) and a
    separator whose remaining components are second-type members.
    """
    if not is_connected(g, g.vertices):
        raise ValueError("state space is defined for connected graphs")
    store = StateStore(g.n, eps, backend)
    everything = full_set(g.n)
    add = store.add
    adj = g.adj
    for x in subsets_up_to(g.n, store.threshold):
        if x and _connected(adj, x):
            add(x)
        for comp in components(g, everything & ~x):
            add(comp)
    return store


def _connected(adj: tuple[int, ...], s: VertexSet) -> bool:
    comp = frontier = s & -s
    while frontier:
        nb = 0
        while frontier:
            low = frontier & -frontier
            nb |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nb & s & ~comp
        comp |= frontier
    return comp == s


def contains(store: StateStore, s: VertexSet) -> bool:
    return s in store


def members_by_cardinality(store: StateStore) -> Iterator[VertexSet]:
    keys = store.keys
    for layer in store.layers():
        for i in layer:
            yield keys[i]


def size_bound(n: int, eps: Epsilon) -> int:
    """``(n + 1)^2 * C(n, floor((1/2 - eps) n))``, an upper bound on the member count."""
    return (n + 1) ** 2 * math.comb(n, eps.small_limit(n))
