import pytest
from hypothesis import given, settings, strategies as st

from treedepth import graph as G
from treedepth.forest import embeds
from treedepth.full import (
    BranchCandidate, Limits, SolverConfig, candidates, decompose, solve, solve_candidate, treedepth,
)
from treedepth.graph import neighborhood, vset
from treedepth.naive import CapExceeded, td_naive
from treedepth.pruned import run_pruned
from treedepth.states import INF, Epsilon, enumerate_states

from conftest import connected_graphs, connected_gnp

TENTH = Epsilon(1, 10)


def exact(g, eps=TENTH):
    return treedepth(g, eps, small_n_cutoff=0)


def test_limits():
    lim = Limits.of(20, TENTH)
    assert (lim.small, lim.q_max, lim.zq_max, lim.y_max) == (8, 3, 11, 7)
    # strict bounds on exact multiples stay strict
    lim = Limits.of(10, TENTH)
    assert (lim.q_max, lim.zq_max, lim.y_max) == (1, 5, 3)


def test_path10():
    res = exact(G.path(10))
    assert res.td == 4
    assert res.witness.height == 4
    assert embeds(G.path(10), res.witness)


def test_complete8():
    assert exact(G.complete(8)).td == 8


def test_decompose_b0():
    g = G.path(6)
    c = decompose(g, vset([0]), None, TENTH)
    assert c is not None
    assert c.Z == vset(range(1, 6))
    assert c.q_parts == (vset([0]),) and c.r_parts == ()


def test_decompose_rejections():
    g = G.path(6)
    assert decompose(g, vset([0]), 0, TENTH) is None
    assert decompose(g, g.vertices, None, TENTH) is None
    assert decompose(g, vset([0]), 3, TENTH) is None


def test_decompose_branching():
    # path 0-1-2 with two extra vertices adjacent to all of it
    g = G.Graph.from_edges(5, [(0, 1), (1, 2)] + [(v, z) for v in (3, 4) for z in (0, 1, 2)])
    c = decompose(g, vset([3]), 0, TENTH)
    assert c is not None
    assert c.Z == vset([0, 1, 2])
    assert c.q_parts == () and c.r_parts == (vset([3]), vset([4]))


def test_two_big_parts_rejected():
    g = G.path(19)
    store = enumerate_states(g, TENTH)
    run_pruned(g, store)
    c = BranchCandidate(1, vset(range(9)), 0, vset([9]), (), (vset(range(9)), vset(range(10, 19))))
    assert solve_candidate(g, c, store) is None


def test_candidate_bounds_never_undercut():
    g = connected_gnp(13, 0.3, 2)
    truth = td_naive(g)
    store = enumerate_states(g, TENTH)
    run_pruned(g, store)
    seen = 0
    for c in candidates(g, Limits.of(g.n, TENTH)):
        out = solve_candidate(g, c, store)
        if out is None:
            continue
        seen += 1
        bound, witness = out
        assert bound >= truth
        assert witness.height == bound and embeds(g, witness)
    assert seen > 0


def test_stats_are_filled():
    res = exact(G.cycle(14))
    s = res.stats
    assert s.states > 0 and s.branches > 0 and s.explored >= s.branches
    assert set(s.as_dict()) == {"states", "branches", "explored", "fallbacks", "pruned_value", "runtime_ms"}


def test_rejects_disconnected():
    with pytest.raises(ValueError):
        treedepth(G.Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(ValueError):
        treedepth(G.Graph(0, ()))


@pytest.mark.parametrize("seed", range(12))
def test_random_matches_naive(seed):
    g = connected_gnp(13 + seed % 2, 0.3, seed)
    res = exact(g)
    assert res.td == td_naive(g)
    assert embeds(g, res.witness) and res.witness.height == res.td


@settings(max_examples=25, deadline=None)
@given(connected_graphs(min_n=1, max_n=10), st.sampled_from(["1/10", "1/8", "1/7"]))
def test_epsilon_independent(g, eps):
    res = treedepth(g, eps, small_n_cutoff=0)
    assert res.td == td_naive(g)
    assert embeds(g, res.witness) and res.witness.height == res.td


def test_trie_backend_agrees():
    g = G.grid(3, 4)
    assert treedepth(g, small_n_cutoff=0, backend="trie").td == exact(g).td


def test_solve_disconnected():
    g = G.disjoint_union(G.complete(3), G.path(7))
    for algorithm in ("naive", "full", "auto"):
        res = solve(g, SolverConfig(algorithm))
        assert res.td == 3 and res.exact
        assert len(res.witness) == 2
        assert sorted(v for t in res.witness for v in t.parents) == list(range(g.n))


def test_solve_empty_and_single():
    assert solve(G.Graph(0, ())).td == 0
    assert solve(G.path(1), SolverConfig("full")).td == 1


def test_solve_pruned_only():
    res = solve(G.path(9), SolverConfig("pruned"))
    assert res.td == 4 and not res.exact
    res = solve(G.complete(10), SolverConfig("pruned"))
    assert res.td == INF and res.witness == []


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig("magic")
    assert SolverConfig("full").cutoff == 0
    assert SolverConfig("auto").cutoff == 12
    assert SolverConfig("auto", small_n_cutoff=3).cutoff == 3


def test_naive_cap_surfaces():
    with pytest.raises(CapExceeded):
        solve(G.path(8), SolverConfig("naive", max_n_naive=5))
