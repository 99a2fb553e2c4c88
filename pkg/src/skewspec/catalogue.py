"""Small graph families and seeded positive weightings for sweeps and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .graph import Arc, WeightedDigraph, from_graph
from .subdigraphs import enumerate_cycles

Edges = tuple[Arc, ...]


def _canonical(edges: Edges, n: int) -> Edges:
    best = None
    for perm in permutations(range(1, n + 1)):
        relabeled = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


def is_connected(edges: Edges, n: int) -> bool:
    if n == 0:
        return True
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {1}
    stack = [1]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def connected_graphs(n: int, max_edges: int | None = None) -> list[Edges]:
    """Connected simple graphs on 1..n, one per isomorphism class (n <= 6)."""
    all_pairs = list(combinations(range(1, n + 1), 2))
    top = len(all_pairs) if max_edges is None else min(max_edges, len(all_pairs))
    seen: set[Edges] = set()
    out: list[Edges] = []
    for m in range(max(n - 1, 0), top + 1):
        for edges in combinations(all_pairs, m):
            if not is_connected(edges, n):
                continue
            key = _canonical(edges, n)
            if key not in seen:
                seen.add(key)
                out.append(key)
    return out


def trees(n: int) -> list[Edges]:
    return connected_graphs(n, max_edges=n - 1)


def cycle_graph(n: int) -> Edges:
    return tuple((i, i + 1) for i in range(1, n)) + ((1, n),)


def complete_graph(n: int) -> Edges:
    return tuple(combinations(range(1, n + 1), 2))


def has_even_cycle(edges: Edges, n: int) -> bool:
    return any(len(c) >= 4 and len(c) % 2 == 0 for c in enumerate_cycles(from_graph(edges, n)))


def _small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def random_weighting(edges: Edges, n: int, rng: random.Random) -> WeightedDigraph:
    """Independent weights p/q with p, q in 1..9 on every arc."""
    arcs = {}
    for u, v in edges:
        arcs[(u, v)] = _small_rational(rng)
        arcs[(v, u)] = _small_rational(rng)
    return WeightedDigraph(n, arcs)


def random_symmetric_weighting(edges: Edges, n: int, rng: random.Random) -> WeightedDigraph:
    arcs = {}
    for u, v in edges:
        arcs[(u, v)] = arcs[(v, u)] = _small_rational(rng)
    return WeightedDigraph(n, arcs)


def random_scaled_weighting(edges: Edges, n: int, rng: random.Random) -> WeightedDigraph:
    """Cycle-symmetric by construction: a_uv = s_uv * t_v / t_u with s symmetric."""
    t = [None] + [_small_rational(rng) for _ in range(n)]
    arcs = {}
    for u, v in edges:
        s = _small_rational(rng)
        arcs[(u, v)] = s * t[v] / t[u]
        arcs[(v, u)] = s * t[u] / t[v]
    return WeightedDigraph(n, arcs)


def weightings(edges: Edges, n: int, seed: int) -> list[tuple[str, WeightedDigraph]]:
    """Unit weights plus three seeded random positive weightings."""
    rng = random.Random(seed)
    return [
        ("unit", from_graph(edges, n)),
        ("random", random_weighting(edges, n, rng)),
        ("symmetric", random_symmetric_weighting(edges, n, rng)),
        ("scaled", random_scaled_weighting(edges, n, rng)),
    ]
