"""Exact tree-depth below 2^n: pruned DP plus branching over problematic tree shapes.

The pruned DP is exact unless every minimal elimination tree has a long path
``Z`` through its middle.  Such trees are recovered by guessing the small set
``Y`` of vertices hanging off that path (plus, optionally, one subtree below
its lowest branching vertex), reading off ``Z`` and the pieces, and ordering
``Z`` optimally with the delay-ordering solver.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import moid
from .forest import ROOT, RootedTree, assemble, embeds
from .graph import Graph, VertexSet, components, is_connected, members, neighborhood
from .naive import DEFAULT_MAX_N_NAIVE, NaiveTable, reconstruct_naive, td_naive
from .pruned import reconstruct_star, run_pruned
from .states import DEFAULT_EPSILON, INF, Epsilon, StateStore, enumerate_states

DEFAULT_SMALL_N_CUTOFF = 12


@dataclass(frozen=True)
class Limits:
    """Integer forms of the size thresholds for a graph on ``n`` vertices.

    Each strict bound ``k < b`` is stored as the largest admissible integer.
    """

    n: int
    small: int  # k <= (1/2 - eps) n
    q_max: int  # k < 2 eps n
    zq_max: int  # k < (1/2 + eps) n; bounds |R| + |Q| and |R_j0| + y
    y_max: int  # k < (1/4 + 3 eps / 2) n

    @classmethod
    def of(cls, n: int, eps: Epsilon) -> Limits:
        e = eps.value
        return cls(
            n=n,
            small=eps.small_limit(n),
            q_max=math.ceil(2 * e * n) - 1,
            zq_max=math.ceil((Fraction(1, 2) + e) * n) - 1,
            y_max=math.ceil((Fraction(1, 4) + 3 * e / 2) * n) - 1,
        )


@dataclass(frozen=True)
class BranchCandidate:
    """One guessed decomposition: path set ``Z`` plus the pieces hanging off it.

    ``r_parts`` lists the pieces below the lowest branching vertex with the
    guessed (smallest) one first; it is empty when that vertex is assumed not
    to branch.
    """

    y: int
    Y: VertexSet
    r1_choice: int | None
    Z: VertexSet
    q_parts: tuple[VertexSet, ...]
    r_parts: tuple[VertexSet, ...]

    @property
    def parts(self) -> tuple[VertexSet, ...]:
        return self.q_parts + self.r_parts


@dataclass
class SolveStats:
    states: int = 0
    branches: int = 0
    explored: int = 0
    fallbacks: int = 0
    pruned_value: float = INF
    runtime: float = 0.0

    def as_dict(self) -> dict:
        return {
            "states": self.states,
            "branches": self.branches,
            "explored": self.explored,
            "fallbacks": self.fallbacks,
            "pruned_value": None if self.pruned_value == INF else self.pruned_value,
            "runtime_ms": round(self.runtime * 1000, 3),
        }


@dataclass
class SolveResult:
    td: int
    witness: RootedTree
    stats: SolveStats = field(default_factory=SolveStats)


def decompose(g: Graph, Y: VertexSet, r1_choice: int | None, eps: Epsilon | Limits,
              y_components: list[VertexSet] | None = None) -> BranchCandidate | None:
    """Turn a guess ``(Y, r1_choice)`` into a candidate, or ``None`` if a sanity check fails.

    ``r1_choice=None`` assumes the lowest path vertex has no pieces below it, so
    ``Y`` is exactly the hanging pieces and ``Z`` is everything else.  Otherwise
    component ``r1_choice`` of ``g[Y]`` is taken as the smallest piece below it
    and ``Z`` is the neighborhood of ``Y``.
    """
    lim = eps if isinstance(eps, Limits) else Limits.of(g.n, eps)
    everything = g.vertices
    if Y & ~everything or Y == everything:
        return None
    y = Y.bit_count()
    comps = components(g, Y) if y_components is None else y_components

    if r1_choice is None:
        if y > lim.q_max:
            return None
        return BranchCandidate(y, Y, None, everything & ~Y, tuple(comps), ())

    if not 0 <= r1_choice < len(comps):
        return None
    r1 = comps[r1_choice]
    q = Y ^ r1
    q_size = q.bit_count()
    if q_size > lim.q_max:
        return None
    z = neighborhood(g, Y)
    rest = everything & ~(z | Y)
    r1_size = r1.bit_count()
    if r1_size + rest.bit_count() + q_size > lim.zq_max:
        return None
    others = components(g, rest)
    if not others:
        return None
    for part in others:
        if part.bit_count() < r1_size:
            return None
    r_parts = (r1, *others)
    for part in r_parts:
        if neighborhood(g, part | q) != z:
            return None
    q_parts = tuple(c for i, c in enumerate(comps) if i != r1_choice)
    return BranchCandidate(y, Y, r1_choice, z, q_parts, r_parts)


def solve_candidate(g: Graph, c: BranchCandidate, store: StateStore, *,
                    max_n_naive: int = DEFAULT_MAX_N_NAIVE, with_witness: bool = True,
                    stats: SolveStats | None = None, eps: Epsilon | None = None):
    """Best height over orderings of ``Z`` for this candidate, with its witness.

    Returns ``(bound, witness)`` (witness ``None`` unless requested) or ``None``
    when the candidate is rejected.  The bound is never below ``td(g)``.
    """
    lim = Limits.of(g.n, store.eps if eps is None else eps)
    parts = c.parts
    a = len(c.q_parts)
    big = [i for i, p in enumerate(parts) if p.bit_count() > lim.small]
    if len(big) > 1:
        return None
    if big:
        j0 = big[0]
        size_j0 = parts[j0].bit_count()
        if j0 <= a or c.y > lim.q_max or size_j0 + c.y > lim.zq_max:
            return None

    heights: list[int] = []
    tables: dict[int, NaiveTable] = {}
    for i, part in enumerate(parts):
        if big and i == big[0]:
            table = NaiveTable()
            h = td_naive(g, part, table, reuse=store, max_n=max_n_naive)
            tables[i] = table
            if stats is not None:
                stats.fallbacks += 1
        else:
            h = store.value(part)
            if h == INF:
                raise RuntimeError(f"small connected set {part:#x} has no finite stored value")
        heights.append(int(h))

    inst = moid.MoidInstance.build(
        members(c.Z), ((members(neighborhood(g, p)), h) for p, h in zip(parts, heights))
    )
    sol = moid.solve(inst)
    if not with_witness:
        return sol.mu, None
    trees = []
    for i, part in enumerate(parts):
        if i in tables:
            trees.append(reconstruct_naive(g, part, tables[i], reuse=store))
        else:
            trees.append(reconstruct_star(g, store, part))
    positions = moid.extract_attachment_positions(inst, sol)
    witness = assemble(sol.order, zip(trees, positions), n=g.n)
    if witness.height != sol.mu:
        raise RuntimeError(f"assembled height {witness.height} != ordering weight {sol.mu}")
    return sol.mu, witness


def candidates(g: Graph, lim: Limits, stats: SolveStats | None = None):
    """Accepted candidates in exploration order: by ``|Y|``, then ``Y``
    lexicographically, then ``b = 0`` before each component choice.

    ``stats.explored`` counts every ``(Y, choice)`` pair looked at.
    """
    bits = [1 << v for v in range(g.n)]
    q_max = lim.q_max
    for y in range(0, min(lim.y_max, g.n - 1) + 1):
        for combo in itertools.combinations(range(g.n), y):
            Y = 0
            for v in combo:
                Y |= bits[v]
            comps = components(g, Y)
            if stats is not None:
                stats.explored += 1 + len(comps)
            # |Q| < 2 eps n fails for every choice whose leftover Y is too big
            if y <= q_max:
                yield decompose(g, Y, None, lim, comps)
            for k, comp in enumerate(comps):
                if y - comp.bit_count() <= q_max:
                    cand = decompose(g, Y, k, lim, comps)
                    if cand is not None:
                        yield cand


def treedepth(g: Graph, eps: Epsilon | str = DEFAULT_EPSILON, *,
              small_n_cutoff: int = DEFAULT_SMALL_N_CUTOFF,
              max_n_naive: int = DEFAULT_MAX_N_NAIVE,
              backend: str = "dict") -> SolveResult:
    """Exact tree-depth of a connected graph with an optimal elimination tree."""
    eps = Epsilon.parse(eps)
    if g.n == 0 or not is_connected(g, g.vertices):
        raise ValueError("treedepth needs a nonempty connected graph; use solve() for others")
    started = time.perf_counter()
    stats = SolveStats()

    if g.n <= small_n_cutoff:
        table = NaiveTable()
        td = td_naive(g, table=table, max_n=max_n_naive)
        witness = reconstruct_naive(g, g.vertices, table)
        stats.states = len(table)
        stats.runtime = time.perf_counter() - started
        return SolveResult(td, witness, stats)

    store = enumerate_states(g, eps, backend)
    run_pruned(g, store)
    stats.states = len(store)
    best = store.value(g.vertices)
    stats.pruned_value = best
    witness = reconstruct_star(g, store, g.vertices) if best != INF else None

    lim = Limits.of(g.n, eps)
    for cand in candidates(g, lim, stats):
        stats.branches += 1
        out = solve_candidate(g, cand, store, max_n_naive=max_n_naive, with_witness=False, stats=stats)
        if out is not None and out[0] < best:
            bound, witness = solve_candidate(g, cand, store, max_n_naive=max_n_naive)
            best = bound

    if witness is None:
        raise RuntimeError("no finite candidate found")
    stats.runtime = time.perf_counter() - started
    return SolveResult(int(best), witness, stats)


# -- front door for arbitrary (possibly disconnected) graphs -------------------------


ALGORITHMS = ("naive", "pruned", "full", "auto")


@dataclass(frozen=True)
class SolverConfig:
    algorithm: str = "auto"
    epsilon: Epsilon = DEFAULT_EPSILON
    small_n_cutoff: int | None = None  # None: 0 for "full", the default for "auto"
    max_n_naive: int = DEFAULT_MAX_N_NAIVE
    backend: str = "dict"

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}")

    @property
    def cutoff(self) -> int:
        if self.small_n_cutoff is not None:
            return self.small_n_cutoff
        return 0 if self.algorithm == "full" else DEFAULT_SMALL_N_CUTOFF


@dataclass
class ForestResult:
    """Result for any graph: ``td`` is ``INF`` only for an unresolved pruned-only run."""

    td: float
    witness: list[RootedTree]
    stats: SolveStats
    exact: bool = True


def solve_connected(g: Graph, config: SolverConfig) -> tuple[float, RootedTree | None, SolveStats]:
    if config.algorithm == "naive":
        started = time.perf_counter()
        table = NaiveTable()
        td = td_naive(g, table=table, max_n=config.max_n_naive)
        stats = SolveStats(states=len(table))
        stats.runtime = time.perf_counter() - started
        return td, reconstruct_naive(g, g.vertices, table), stats
    if config.algorithm == "pruned":
        started = time.perf_counter()
        store = enumerate_states(g, config.epsilon, config.backend)
        run_pruned(g, store)
        value = store.value(g.vertices)
        stats = SolveStats(states=len(store), pruned_value=value)
        tree = reconstruct_star(g, store, g.vertices) if value != INF else None
        stats.runtime = time.perf_counter() - started
        return value, tree, stats
    res = treedepth(g, config.epsilon, small_n_cutoff=config.cutoff,
                    max_n_naive=config.max_n_naive, backend=config.backend)
    return res.td, res.witness, res.stats


def solve(g: Graph, config: SolverConfig = SolverConfig()) -> ForestResult:
    """Tree-depth of any graph: the maximum over components, with a witness forest."""
    total = SolveStats(pruned_value=0)
    trees: list[RootedTree] = []
    td: float = 0
    exact = True
    started = time.perf_counter()
    for comp in components(g, g.vertices):
        sub, ids = g.induced(comp)
        value, tree, stats = solve_connected(sub, config)
        td = max(td, value)
        total.states += stats.states
        total.branches += stats.branches
        total.explored += stats.explored
        total.fallbacks += stats.fallbacks
        total.pruned_value = max(total.pruned_value, stats.pruned_value)
        if tree is None:
            exact = False
            continue
        trees.append(RootedTree({ids[v]: (ROOT if p == ROOT else ids[p]) for v, p in tree.parents.items()}))
    if config.algorithm == "pruned":
        # the pruned DP alone only gives an upper bound
        exact = False
    total.runtime = time.perf_counter() - started
    if g.n == 0:
        total.pruned_value = INF
    result = ForestResult(td, trees, total, exact)
    if trees and len(trees) == len(components(g, g.vertices)):
        for t in trees:
            if not embeds(g, t, t.vertex_set):
                raise RuntimeError("witness does not embed the graph")
    return result
