"""How often the pruned DP alone misses the optimum on random graphs.

For each sample the pruned value (infinite if the whole vertex set is not
covered) is compared with the exact tree-depth; branching closes the gap.
"""

import argparse
from collections import Counter

from treedepth import graph as G
from treedepth.full import treedepth
from treedepth.states import INF, Epsilon


def main():
    ap = argparse.ArgumentParser(description="pruned DP gap on random graphs")
    ap.add_argument("--n", type=int, default=13)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--eps", default="1/10")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    eps = Epsilon.parse(args.eps)
    gaps = Counter()
    for i in range(args.samples):
        g = G.gnp(args.n, args.p, args.seed + i)
        if not G.is_connected(g, g.vertices):
            gaps["disconnected"] += 1
            continue
        res = treedepth(g, eps, small_n_cutoff=0)
        pruned = res.stats.pruned_value
        gaps["inf" if pruned == INF else int(pruned - res.td)] += 1
    for key, count in sorted(gaps.items(), key=str):
        print(f"gap {key}: {count}")


if __name__ == "__main__":
    main()
