"""Tree-depth and search statistics across graph families, written as CSV.

    python scripts/bench_families.py --sizes 8-18 --eps 1/10,1/8 -o bench.csv
"""

import argparse
import sys

from treedepth.cli import cmd_bench, parse_sizes
from treedepth.states import Epsilon


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", default="path,cycle,star,complete,grid,gnp:0.3")
    ap.add_argument("--sizes", type=parse_sizes, default=parse_sizes("8-16"))
    ap.add_argument("--eps", default="1/10")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-o", "--output")
    args = ap.parse_args()
    eps = [Epsilon.parse(e) for e in args.eps.split(",")]
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        cmd_bench(args.families.split(","), args.sizes, eps, args.seed, out)
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    main()
