import pytest
from hypothesis import given, strategies as st

from treedepth import graph as G
from treedepth.graph import components, is_connected, neighborhood, vset, members

from conftest import graphs


def test_components_examples():
    assert components(G.complete(3), vset([0, 1, 2])) == [vset([0, 1, 2])]
    assert components(G.path(3), vset([0, 2])) == [vset([0]), vset([2])]
    c5 = G.cycle(5)
    assert components(c5, c5.vertices & ~1) == [vset([1, 2, 3, 4])]
    assert components(c5, 0) == []


def test_neighborhood_examples():
    assert neighborhood(G.star(5), vset([0])) == vset([1, 2, 3, 4])
    assert neighborhood(G.path(4), vset([1, 2])) == vset([0, 3])
    assert neighborhood(G.cycle(5), vset([2, 3])) == vset([1, 4])


def test_is_connected_examples():
    assert is_connected(G.path(5), vset([3]))
    assert not is_connected(G.path(3), vset([0, 2]))
    assert not is_connected(G.path(3), 0)
    k4 = G.complete(4)
    assert all(is_connected(k4, s) for s in range(1, 16))


@given(graphs(max_n=10), st.integers(0, 2**10 - 1))
def test_components_partition(g, raw):
    s = raw & g.vertices
    parts = components(g, s)
    union = 0
    for p in parts:
        assert union & p == 0
        assert is_connected(g, p)
        # a component has no edge to the rest of s
        assert neighborhood(g, p) & s == 0
        union |= p
    assert union == s
    assert [min(members(p)) for p in parts] == sorted(min(members(p)) for p in parts)


@given(graphs(max_n=10), st.integers(0, 2**10 - 1))
def test_neighborhood_disjoint(g, raw):
    s = raw & g.vertices
    nb = neighborhood(g, s)
    assert nb & s == 0
    brute = {u for v in members(s) for u in range(g.n) if g.adj[v] >> u & 1} - set(members(s))
    assert nb == vset(brute)


def test_parse_dimacs():
    g = G.parse_graph("c hello\np edge 3 2\ne 1 2\ne 2 3\n", "dimacs")
    assert g == G.path(3)
    assert G.parse_graph(b"p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n") == G.path(3)


def test_parse_edgelist():
    assert G.parse_graph("0 1\n1 2\n", "edgelist") == G.path(3)
    assert G.parse_graph("# c\nn 4\n0 1\n1 2  # tail\n", "edgelist").n == 4


@pytest.mark.parametrize(
    "text, fmt, fragment",
    [
        ("p edge 3 2\ne 1 4\n", "dimacs", "line 2"),
        ("p edge 3\n", "dimacs", "line 1"),
        ("e 1 2\n", "dimacs", "before header"),
        ("p edge 3 1\ne 2 2\n", "dimacs", "self-loop"),
        ("p edge 3 1\ne 1 x\n", "dimacs", "line 2"),
        ("n 2\n0 5\n", "edgelist", "out of range"),
        ("0 1 2\n", "edgelist", "line 1"),
    ],
)
def test_parse_errors(text, fmt, fragment):
    with pytest.raises(G.GraphFormatError, match=fragment):
        G.parse_graph(text, fmt)


@given(graphs(max_n=12), st.sampled_from(["dimacs", "edgelist"]))
def test_serialize_roundtrip(g, fmt):
    assert G.parse_graph(G.serialize_graph(g, fmt), fmt) == g


def test_generators():
    assert G.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert G.complete(3).edges() == [(0, 1), (0, 2), (1, 2)]
    assert G.cycle(5).m == 5
    assert G.star(5).degree(0) == 4
    assert G.grid(3, 4).m == 3 * 3 + 2 * 4
    assert G.gnp(8, 0.5, seed=7) == G.gnp(8, 0.5, seed=7)
    assert G.generate("path", 4) == G.path(4)


@pytest.mark.parametrize("call", [lambda: G.path(0), lambda: G.cycle(2), lambda: G.grid(0, 3),
                                  lambda: G.gnp(5, 1.5, 0), lambda: G.generate("wheel", 5)])
def test_generator_errors(call):
    with pytest.raises(ValueError):
        call()


def test_graph_invariants_rejected():
    with pytest.raises(ValueError):
        G.Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        G.Graph(1, (0b1,))  # self-loop
    with pytest.raises(ValueError):
        G.Graph.from_edges(2, [(0, 2)])


def test_induced_relabels():
    h, ids = G.cycle(5).induced(vset([0, 1, 2]))
    assert ids == [0, 1, 2]
    assert h == G.path(3)


def test_large_vertex_ids_beyond_word():
    g = G.path(70)
    assert components(g, g.vertices & ~(1 << 64)) == [(1 << 64) - 1, g.vertices & ~((1 << 65) - 1)]
