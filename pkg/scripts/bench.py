#!/usr/bin/env python3
"""Time CSO (and closure, on small sizes) on stick instances; write CSV.

Usage:
    python3 scripts/bench.py                         # default sizes, CSV to stdout
    python3 scripts/bench.py 1e4 2e4 4e4 -o bench.csv --reps 7
"""

import argparse
import sys

from stickgraph.genbench import bench_scaling


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", nargs="*", type=float, default=[1e4, 2e4, 4e4, 8e4])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--closure-max-edges", type=int, default=20_000)
    ap.add_argument("-o", "--output")
    args = ap.parse_args()
    rep = bench_scaling([int(s) for s in args.sizes], reps=args.reps, seed=args.seed,
                        closure_max_edges=args.closure_max_edges)
    csv = rep.to_csv()
    if args.output:
        with open(args.output, "w") as f:
            f.write(csv)
    else:
        sys.stdout.write(csv)
    print("ratios: " + " ".join(f"{r:.2f}" for r in rep.ratios), file=sys.stderr)
    if rep.dropped:
        print(f"dropped (below timer resolution): {rep.dropped}", file=sys.stderr)


if __name__ == "__main__":
    main()
