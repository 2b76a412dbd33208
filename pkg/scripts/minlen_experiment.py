#!/usr/bin/env python3
"""Local-search heuristic versus exact minimum length on small stick instances.

Usage:
    python3 scripts/minlen_experiment.py [instances] [seed]
"""

import sys
from collections import Counter

from stickgraph.cso import run_cso
from stickgraph.genbench import gen_stick_instance
from stickgraph.minlen import brute_minlen, is_n_overlap, local_search_minlen
from stickgraph.representation import build_representation, total_length


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 300
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    gaps, canon_gaps = Counter(), Counter()
    overlap = 0
    for s in range(seed, seed + count):
        inst = gen_stick_instance(2 + s % 7, 2 + s % 6, s)
        best = total_length(brute_minlen(inst))
        heur = total_length(local_search_minlen(inst))
        canon = total_length(build_representation(inst, run_cso(inst).order))
        gaps[heur - best] += 1
        canon_gaps[canon - best] += 1
        overlap += is_n_overlap(inst)
    print(f"{count} instances ({overlap} N-overlap)")
    print("heuristic - optimum:", dict(sorted(gaps.items())))
    print("canonical - optimum:", dict(sorted(canon_gaps.items())))


if __name__ == "__main__":
    main()
