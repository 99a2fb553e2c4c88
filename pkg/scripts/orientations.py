"""Count distinct skew-adjacency polynomials over all orientations of small graphs.

    python scripts/orientations.py --max-n 6 --max-edges 9
"""

import argparse

from skewspec import catalogue
from skewspec.signing import orientations_of_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-edges", type=int, default=8)
    args = ap.parse_args()

    mismatches = 0
    for n in range(1, args.max_n + 1):
        for edges in catalogue.connected_graphs(n, args.max_edges):
            r = orientations_of_graph(edges, n)
            even = catalogue.has_even_cycle(edges, n)
            mismatches += r.all_same == even
            print(f"n={n} m={len(edges):2d} even_cycle={even!s:5s} distinct={r.distinct_poly_count:3d} {list(edges)}")
    print("mismatches:", mismatches)


if __name__ == "__main__":
    main()
