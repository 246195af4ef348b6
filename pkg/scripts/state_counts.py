"""Size of the pruned state space against the (n+1)^2 * C(n, t) bound.

Prints one row per (family, n, epsilon) with the member count, the bound,
their ratio and the enumeration time.
"""

import argparse
import time

from treedepth import graph as G
from treedepth.cli import parse_sizes, family_graph
from treedepth.states import Epsilon, enumerate_states, size_bound


def main():
    ap = argparse.ArgumentParser(description="state-space size versus bound")
    ap.add_argument("--families", default="path,cycle,gnp:0.2")
    ap.add_argument("--sizes", type=parse_sizes, default=parse_sizes("10,14,18,20"))
    ap.add_argument("--eps", default="1/10,1/8")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'family':<10}{'n':>4}{'eps':>7}{'states':>11}{'bound':>14}{'ratio':>11}{'sec':>8}")
    for family in args.families.split(","):
        for n in args.sizes:
            g = family_graph(family, n, args.seed)
            if g is None or not G.is_connected(g, g.vertices):
                continue
            for text in args.eps.split(","):
                eps = Epsilon.parse(text)
                started = time.perf_counter()
                count = len(enumerate_states(g, eps))
                elapsed = time.perf_counter() - started
                bound = size_bound(n, eps)
                print(f"{family:<10}{n:>4}{text:>7}{count:>11}{bound:>14}{count / bound:>11.2e}{elapsed:>8.2f}")


if __name__ == "__main__":
    main()
