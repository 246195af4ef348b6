"""Command line: solve, verify, generate, oracle, bench.

Exit codes: 0 success, 1 verification failed, 2 bad input, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import graph as G
from .forest import (
    ROOT,
    forest_first_violation,
    forest_from_parent_array,
    forest_height,
    forest_parent_array,
    to_dot,
)
from .full import DEFAULT_SMALL_N_CUTOFF, ALGORITHMS, SolverConfig, solve
from .naive import DEFAULT_MAX_N_NAIVE, CapExceeded, td_naive
from .states import DEFAULT_EPSILON, INF, Epsilon, size_bound

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    algorithm: str = "auto"
    epsilon: Epsilon = DEFAULT_EPSILON
    input: str = "-"
    format: str = "dimacs"
    witness: str | None = None
    parents: str | None = None
    json: bool = False
    seed: int = 0
    max_n_naive: int = DEFAULT_MAX_N_NAIVE
    small_n_cutoff: int | None = None

    def solver(self) -> SolverConfig:
        return SolverConfig(self.algorithm, self.epsilon, self.small_n_cutoff, self.max_n_naive)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_solve(cfg: RunConfig) -> int:
    try:
        g = G.parse_graph(_read(cfg.input), cfg.format)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    started = time.perf_counter()
    try:
        res = solve(g, cfg.solver())
    except CapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    elapsed = time.perf_counter() - started
    td = None if res.td == INF else int(res.td)
    parent = forest_parent_array(res.witness, g.n) if res.witness and len(res.witness) == len(
        G.components(g, g.vertices)) else None

    if cfg.witness and parent is not None:
        with open(cfg.witness, "w") as fh:
            fh.write(to_dot(res.witness))
    if cfg.parents and parent is not None:
        with open(cfg.parents, "w") as fh:
            fh.write(format_parent_array(parent))

    if cfg.json:
        out = {
            "n": g.n,
            "m": g.m,
            "treedepth": td,
            "exact": res.exact,
            "algorithm": cfg.algorithm,
            "epsilon": str(cfg.epsilon),
            "seed": cfg.seed,
            "parent": parent,
            "stats": res.stats.as_dict(),
            "runtime_ms": round(elapsed * 1000, 3),
        }
        print(json.dumps(out, sort_keys=True))
    else:
        print("inf" if td is None else td)
    return EXIT_OK


def format_parent_array(parent: Sequence[int]) -> str:
    return "".join(f"{v} {p}\n" for v, p in enumerate(parent))


_DOT_EDGE = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*;?\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*(\[.*\])?\s*;?\s*$")


def parse_tree_file(text: str, n: int) -> list[int]:
    """Parent array from either ``v parent`` lines or the DOT written by ``solve``."""
    parent: list[int | None] = [None] * n
    if text.lstrip().startswith("digraph"):
        seen = set()
        for line in text.splitlines()[1:]:
            if line.strip() in ("", "}"):
                continue
            if m := _DOT_EDGE.match(line):
                p, v = int(m[1]), int(m[2])
                _check_id(v, n)
                _check_id(p, n)
                if parent[v] not in (None, ROOT):
                    raise ValueError(f"vertex {v} has two parents")
                parent[v] = p
                seen.update((p, v))
            elif m := _DOT_NODE.match(line):
                v = int(m[1])
                _check_id(v, n)
                seen.add(v)
            else:
                raise ValueError(f"cannot parse DOT line {line.strip()!r}")
        for v in seen:
            if parent[v] is None:
                parent[v] = ROOT
    else:
        for lineno, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0].split()
            if not body:
                continue
            if len(body) != 2:
                raise ValueError(f"line {lineno}: expected '<vertex> <parent>'")
            v, p = int(body[0]), int(body[1])
            _check_id(v, n)
            if p != ROOT:
                _check_id(p, n)
            if parent[v] is not None:
                raise ValueError(f"line {lineno}: vertex {v} listed twice")
            parent[v] = p
    missing = [v for v in range(n) if parent[v] is None]
    if missing:
        raise ValueError(f"tree does not cover vertices {missing[:5]}")
    return parent


def _check_id(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for a graph on {n} vertices")


def cmd_verify(graph_path: str, tree_path: str, fmt: str = "dimacs") -> int:
    try:
        g = G.parse_graph(_read(graph_path), fmt)
        parent = parse_tree_file(_read(tree_path), g.n)
        trees = forest_from_parent_array(parent)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    bad = forest_first_violation(g, trees)
    print(f"height {forest_height(trees)}")
    if bad is not None:
        print(f"violating edge {bad[0]} {bad[1]}")
        return EXIT_FAIL
    return EXIT_OK


def family_graph(family: str, n: int, seed: int) -> G.Graph | None:
    """Graph of ``family`` with ``n`` vertices, or None where the family has no such member.

    ``grid`` means a 3-row grid; ``gnp:<p>`` draws G(n, p) with ``seed``.
    """
    if family.startswith("gnp:"):
        return G.gnp(n, float(family[4:]), seed)
    if family == "grid":
        return G.grid(3, n // 3) if n % 3 == 0 and n >= 3 else None
    if family == "cycle" and n < 3:
        return None
    return G.generate(family, n)


def cmd_bench(families: Sequence[str], sizes: Sequence[int], eps_list: Sequence[Epsilon],
              seed: int = 0, out=None, max_n_naive: int = DEFAULT_MAX_N_NAIVE) -> int:
    out = sys.stdout if out is None else out
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["family", "n", "epsilon", "treedepth", "states", "state_bound",
                     "branches", "fallbacks", "runtime_ms"])
    for family in families:
        for n in sizes:
            g = family_graph(family, n, seed)
            if g is None:
                continue
            for eps in eps_list:
                res = solve(g, SolverConfig("full", eps, 0, max_n_naive))
                writer.writerow([family, n, str(eps), int(res.td), res.stats.states,
                                 size_bound(n, eps), res.stats.branches, res.stats.fallbacks,
                                 round(res.stats.runtime * 1000, 3)])
    return EXIT_OK


def cmd_oracle(graph_path: str, fmt: str = "dimacs") -> int:
    from .oracle import MAX_PROPERTY_N, check_minimal_tree_properties, minimal_trees

    try:
        g = G.parse_graph(_read(graph_path), fmt)
    except (OSError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    if not G.is_connected(g, g.vertices):
        return _fail(EXIT_INPUT, "oracle needs a connected graph")
    try:
        report = minimal_trees(g)
    except CapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    naive = td_naive(g)
    print(f"td {report.td}")
    print(f"minimal trees {len(report.minimal_trees)}")
    print(f"naive td {naive}")
    code = EXIT_OK if naive == report.td else EXIT_FAIL
    if g.n <= MAX_PROPERTY_N:
        violations = check_minimal_tree_properties(g)
        print(f"structure violations {len(violations)}")
        for line in violations:
            print(f"  {line}")
        if violations:
            code = EXIT_FAIL
    return code


def cmd_generate(family: str, n: int | None, rows: int | None, cols: int | None,
                 p: float | None, seed: int, fmt: str) -> int:
    try:
        if family == "grid":
            g = G.grid(rows if rows is not None else 3, cols if cols is not None else n)
        elif family == "gnp":
            g = G.gnp(n, p if p is not None else 0.5, seed)
        else:
            g = G.generate(family, n)
    except (TypeError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    sys.stdout.write(G.serialize_graph(g, fmt))
    return EXIT_OK


def parse_sizes(text: str) -> list[int]:
    out: list[int] = []
    for chunk in text.split(","):
        if "-" in chunk:
            lo, hi = chunk.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def _epsilon(text: str) -> Epsilon:
    try:
        return Epsilon.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treedepth", description="Exact tree-depth solver.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute the tree-depth of a graph")
    s.add_argument("--input", "-i", default="-", help="graph file (default: stdin)")
    s.add_argument("--format", "-f", choices=("dimacs", "edgelist"), default="dimacs")
    s.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="auto")
    s.add_argument("--epsilon", type=_epsilon, default=DEFAULT_EPSILON)
    s.add_argument("--witness", help="write the elimination forest as DOT")
    s.add_argument("--parents", help="write the elimination forest as 'vertex parent' lines")
    s.add_argument("--json", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-n-naive", type=int, default=DEFAULT_MAX_N_NAIVE)
    s.add_argument("--small-n-cutoff", type=int, default=None,
                   help=f"use the naive DP up to this size (auto: {DEFAULT_SMALL_N_CUTOFF}, full: 0)")

    v = sub.add_parser("verify", help="check that a tree's closure contains the graph")
    v.add_argument("graph")
    v.add_argument("tree", help="parent-array or DOT file")
    v.add_argument("--format", "-f", choices=("dimacs", "edgelist"), default="dimacs")

    gen = sub.add_parser("generate", help="print a generated graph")
    gen.add_argument("family", choices=sorted(G.FAMILIES))
    gen.add_argument("--n", type=int)
    gen.add_argument("--rows", type=int)
    gen.add_argument("--cols", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", "-f", choices=("dimacs", "edgelist"), default="dimacs")

    o = sub.add_parser("oracle", help="brute-force minimal trees of a tiny graph")
    o.add_argument("--input", "-i", default="-")
    o.add_argument("--format", "-f", choices=("dimacs", "edgelist"), default="dimacs")

    b = sub.add_parser("bench", help="CSV of tree-depth and search statistics per family and size")
    b.add_argument("--families", default="path,cycle,star,complete,grid",
                   help="comma list; gnp:<p> for random graphs")
    b.add_argument("--sizes", type=parse_sizes, default=parse_sizes("8-14"), help="e.g. 8-20 or 8,10,12")
    b.add_argument("--eps", default="1/10", help="comma list of epsilons")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--max-n-naive", type=int, default=DEFAULT_MAX_N_NAIVE)
    b.add_argument("--output", "-o", help="CSV path (default: stdout)")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        cfg = RunConfig(args.algorithm, args.epsilon, args.input, args.format, args.witness,
                        args.parents, args.json, args.seed, args.max_n_naive, args.small_n_cutoff)
        return cmd_solve(cfg)
    if args.command == "verify":
        return cmd_verify(args.graph, args.tree, args.format)
    if args.command == "generate":
        return cmd_generate(args.family, args.n, args.rows, args.cols, args.p, args.seed, args.format)
    if args.command == "oracle":
        return cmd_oracle(args.input, args.format)
    if args.command == "bench":
        try:
            eps_list = [Epsilon.parse(e) for e in args.eps.split(",")]
        except ValueError as exc:
            return _fail(EXIT_INPUT, str(exc))
        families = args.families.split(",")
        if args.output:
            with open(args.output, "w", newline="") as fh:
                return cmd_bench(families, args.sizes, eps_list, args.seed, fh, args.max_n_naive)
        return cmd_bench(families, args.sizes, eps_list, args.seed, None, args.max_n_naive)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
