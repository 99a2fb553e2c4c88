"""Compare the structural decider with brute force over every connected graph.

    python scripts/oracle_sweep.py --max-n 5 --max-edges 8 --seed 7

Prints one row per (graph, weighting) and a final agreement count.
"""

import argparse
import time

from skewspec import catalogue
from skewspec.signing import brute_force_invariance, decide_invariance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-edges", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()

    total = agree = 0
    t0 = time.perf_counter()
    for n in range(1, args.max_n + 1):
        for idx, edges in enumerate(catalogue.connected_graphs(n, args.max_edges)):
            for kind, d in catalogue.weightings(edges, n, args.seed + 1000 * n + idx):
                v = decide_invariance(d)
                r = brute_force_invariance(d)
                total += 1
                agree += v.invariant == r.invariant
                if not args.quiet:
                    why = ""
                    if v.even_cycle_witness:
                        why = f"even cycle {list(v.even_cycle_witness.vertices)}"
                    elif v.asymmetry_witness:
                        why = f"asymmetric {list(v.asymmetry_witness.cycle.vertices)}"
                    print(
                        f"n={n} edges={list(edges)} {kind:9s} decide={v.invariant!s:5s} "
                        f"brute={r.invariant!s:5s} polys={len(r.polys):3d} {why}"
                    )
    print(f"agreement {agree}/{total} in {time.perf_counter() - t0:.1f}s (seed {args.seed})")


if __name__ == "__main__":
    main()
