import io
import math

import pytest
from hypothesis import given, settings, strategies as st

from treedepth import graph as G
from treedepth.graph import components, is_connected, vset
from treedepth.pruned import run_pruned
from treedepth.states import (
    INF, BitTrie, Epsilon, StateStore, contains, enumerate_states, members_by_cardinality,
    size_bound, subsets_up_to,
)

from conftest import connected_graphs, connected_gnp

TENTH = Epsilon(1, 10)


def reference_states(g, eps):
    """Plain double loop over all subsets: no trie, no sweep sharing."""
    n = g.n
    limit = (0.5 - eps.num / eps.den) * n
    small = [s for s in range(1 << n) if bin(s).count("1") <= math.floor(limit + 1e-9)]
    out = set()
    for s in range(1, 1 << n):
        if bin(s).count("1") <= math.floor(limit + 1e-9) and is_connected(g, s):
            out.add(s)
    for x in small:
        out.update(components(g, g.vertices & ~x))
    return out


def test_epsilon():
    assert Epsilon.parse("1/10") == TENTH
    assert TENTH.small_limit(20) == 8
    assert TENTH.small_limit(5) == 2
    assert Epsilon(1, 8).small_limit(16) == 6
    # 2 * den * k <= (den - 2 num) * n evaluated exactly at the boundary
    assert Epsilon(1, 7).small_limit(14) == 5
    for bad in ("1/6", "0", "1/5", "-1/10", "x"):
        with pytest.raises(ValueError):
            Epsilon.parse(bad)


def test_p5_members(p5):
    store = enumerate_states(p5, TENTH)
    assert vset([3, 4]) in store
    assert vset([1, 2, 3, 4]) in store
    assert vset([0, 2]) not in store


def test_contains_examples():
    g = G.cycle(7)
    store = enumerate_states(g, TENTH)
    assert contains(store, g.vertices)
    assert not contains(store, 0)
    assert all(contains(store, 1 << v) for v in range(g.n))


def test_members_by_cardinality():
    g = G.path(3)
    order = list(members_by_cardinality(enumerate_states(g, TENTH)))
    assert [s.bit_count() for s in order] == sorted(s.bit_count() for s in order)
    assert order[0].bit_count() == 1
    assert order[-1] == g.vertices
    assert order.index(vset([0])) < order.index(g.vertices)


def test_subsets_up_to():
    got = list(subsets_up_to(6, 2))
    assert len(got) == len(set(got)) == 1 + 6 + 15
    assert all(s.bit_count() <= 2 for s in got)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=11), st.sampled_from([Epsilon(1, 10), Epsilon(1, 8), Epsilon(1, 7)]))
def test_matches_reference(g, eps):
    store = enumerate_states(g, eps)
    assert set(store) == reference_states(g, eps)
    assert len(store) <= size_bound(g.n, eps)
    assert g.vertices in store
    assert all(is_connected(g, s) for s in store)


@pytest.mark.parametrize("seed", range(4))
def test_matches_reference_n14(seed):
    g = connected_gnp(14, 0.25, seed)
    assert set(enumerate_states(g, TENTH)) == reference_states(g, TENTH)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=10))
def test_trie_backend_same_store(g):
    a = enumerate_states(g, TENTH, backend="dict")
    b = enumerate_states(g, TENTH, backend="trie")
    assert a.keys == b.keys
    for s in range(1 << g.n):
        assert (s in a) == (s in b)


def test_bit_trie():
    t = BitTrie(5)
    assert t.insert(0b10110, 0) == 0
    assert t.insert(0b10110, 7) == 0
    assert t.insert(0b00001, 1) == 1
    assert 0b10110 in t and 0b00001 in t
    assert 0b10111 not in t and 0 not in t and 1 << 9 not in t
    assert len(t) == 2


def test_dump_load_roundtrip():
    g = G.grid(3, 3)
    store = enumerate_states(g, TENTH)
    run_pruned(g, store)
    buf = io.BytesIO()
    store.dump(buf)
    buf.seek(0)
    back = StateStore.load(buf)
    assert back.n == store.n and back.eps == store.eps
    assert back.keys == store.keys and back.td == store.td and back.root == store.root
    assert back.computed


def test_dump_keeps_infinity():
    g = G.complete(10)
    store = enumerate_states(g, TENTH)
    run_pruned(g, store)
    assert store.value(g.vertices) == INF
    buf = io.BytesIO()
    store.dump(buf)
    buf.seek(0)
    assert StateStore.load(buf).value(g.vertices) == INF


def test_requires_connected():
    with pytest.raises(ValueError):
        enumerate_states(G.Graph.from_edges(3, [(0, 1)]), TENTH)
