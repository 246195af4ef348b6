import hypothesis.strategies as st
import pytest

from treedepth import graph as G

# acceptance tests append "PASS/FAIL criterion ..." lines here
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return G.Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(e for e, k in zip(pairs, keep) if k)
    return G.Graph.from_edges(n, sorted(edges))


def connected_gnp(n, p, seed):
    """First connected G(n, p) sample at or after ``seed``."""
    while True:
        g = G.gnp(n, p, seed)
        if G.is_connected(g, g.vertices):
            return g
        seed += 1000


@pytest.fixture
def p5():
    return G.path(5)
