"""Cycles, linear subdigraphs and digon covers, and the coefficient sums built on them.

A linear subdigraph is a vertex-disjoint union of directed cycles. Summing
``(-1)^(#cycles) * (product of arc weights)`` over those covering exactly
``k`` vertices gives the coefficient ``a_k`` of ``det(xI - A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Arc, WeightedDigraph

MAX_VERTICES = 10


class TooLargeError(ValueError):
    pass


def _check_size(d: WeightedDigraph, limit: int | None) -> None:
    limit = MAX_VERTICES if limit is None else limit
    if d.n > limit:
        raise TooLargeError(f"{d.n} vertices exceeds enumeration limit {limit}")


@dataclass(frozen=True, order=True)
class Cycle:
    """Directed cycle v_1 -> v_2 -> ... -> v_t -> v_1, rotated so min vertex leads."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if not vs:
            raise ValueError("empty cycle")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        i = vs.index(min(vs))
        object.__setattr__(self, "vertices", vs[i:] + vs[:i])

    @classmethod
    def of(cls, *vertices: int) -> "Cycle":
        return cls(tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def weight(self, d: WeightedDigraph) -> Fraction:
        out = Fraction(1)
        for u, v in self.arcs:
            out *= d.arcs[(u, v)]
        return out

    def sort_key(self) -> tuple:
        return (len(self.vertices), self.vertices)

    def to_json(self) -> list[int]:
        return list(self.vertices)


def reverse_cycle(c: Cycle) -> Cycle:
    return Cycle(tuple(reversed(c.vertices)))


@dataclass(frozen=True)
class LinearSubdigraph:
    cycles: tuple[Cycle, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for c in self.cycles:
            if seen.intersection(c.vertices):
                raise ValueError("cycles of a linear subdigraph must be vertex-disjoint")
            seen.update(c.vertices)
        object.__setattr__(self, "cycles", tuple(sorted(self.cycles)))

    @property
    def covered(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @property
    def is_even_linear(self) -> bool:
        return all(len(c) % 2 == 0 for c in self.cycles)

    def weight(self, d: WeightedDigraph) -> Fraction:
        out = Fraction(1)
        for c in self.cycles:
            out *= c.weight(d)
        return out

    def signed_weight(self, d: WeightedDigraph) -> Fraction:
        return (-1) ** self.num_cycles * self.weight(d)


@dataclass(frozen=True)
class DigonCover:
    """Vertex-disjoint digons, each stored as ``(u, v)`` with ``u < v``."""

    digons: tuple[Arc, ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted((min(e), max(e)) for e in self.digons))
        verts = [v for e in norm for v in e]
        if any(u == v for u, v in norm) or len(set(verts)) != len(verts):
            raise ValueError("digons of a cover must be vertex-disjoint")
        object.__setattr__(self, "digons", norm)

    @property
    def covered(self) -> int:
        return 2 * len(self.digons)

    def weight(self, d: WeightedDigraph) -> Fraction:
        """Product of w(uv) * w(vu) over the digons."""
        out = Fraction(1)
        for u, v in self.digons:
            out *= d.arcs[(u, v)] * d.arcs[(v, u)]
        return out

    def as_linear_subdigraph(self) -> LinearSubdigraph:
        return LinearSubdigraph(tuple(Cycle(e) for e in self.digons))


def enumerate_cycles(
    d: WeightedDigraph, max_len: int | None = None, *, limit: int | None = None
) -> list[Cycle]:
    """All simple directed cycles of length <= max_len, sorted by (length, vertices).

    Each cycle is found once, from its minimum vertex, by depth-first
    extension through larger vertices only. Loops count as 1-cycles.
    """
    _check_size(d, limit)
    max_len = d.n if max_len is None else min(max_len, d.n)
    return list(_cycles(d, max_len))


@lru_cache(maxsize=1024)
def _cycles(d: WeightedDigraph, max_len: int) -> tuple[Cycle, ...]:
    succ = {u: sorted(v for v in d.out_neighbors(u)) for u in range(1, d.n + 1)}
    found: list[Cycle] = []

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        for w in succ[path[-1]]:
            if w == start:
                found.append(Cycle(tuple(path)))
            elif w > start and w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                extend(start, path, on_path)
                path.pop()
                on_path.discard(w)

    if max_len >= 1:
        for s in range(1, d.n + 1):
            extend(s, [s], {s})
    return tuple(sorted(found, key=Cycle.sort_key))


def _iter_linear(
    cycles: Sequence[Cycle], k: int
) -> Iterator[tuple[Cycle, ...]]:
    """Disjoint cycle collections covering exactly k vertices.

    Chosen cycles have strictly increasing minimum vertices, so every
    collection is produced once.
    """
    by_min: dict[int, list[Cycle]] = {}
    for c in cycles:
        if len(c) <= k:
            by_min.setdefault(c.vertices[0], []).append(c)
    mins = sorted(by_min)

    def rec(idx: int, used: frozenset[int], left: int, chosen: list[Cycle]):
        if left == 0:
            yield tuple(chosen)
            return
        for j in range(idx, len(mins)):
            m = mins[j]
            if m in used:
                continue
            for c in by_min[m]:
                if len(c) <= left and used.isdisjoint(c.vertices):
                    chosen.append(c)
                    yield from rec(j + 1, used | set(c.vertices), left - len(c), chosen)
                    chosen.pop()

    yield from rec(0, frozenset(), k, [])


def enumerate_linear_subdigraphs(
    d: WeightedDigraph, k: int, even_only: bool = False, *, limit: int | None = None
) -> list[LinearSubdigraph]:
    if not 0 < k <= d.n:
        raise ValueError(f"k must lie in 1..{d.n}")
    cycles = enumerate_cycles(d, k, limit=limit)
    if even_only:
        cycles = [c for c in cycles if len(c) % 2 == 0]
    return [LinearSubdigraph(cs) for cs in _iter_linear(cycles, k)]


def coefficient_via_subdigraphs(d: WeightedDigraph, k: int) -> Fraction:
    """a_k of det(xI - A(d)) as a signed sum over linear subdigraphs on k vertices."""
    return sum(
        (L.signed_weight(d) for L in enumerate_linear_subdigraphs(d, k)), Fraction(0)
    )


def _is_skew(d: WeightedDigraph) -> bool:
    return all(d.weight(v, u) == -w for (u, v), w in d.arcs.items())


def skew_coefficient_via_even_subdigraphs(d: WeightedDigraph, k: int) -> Fraction:
    """a_k for a skew-symmetric weighting: 0 for odd k, even-linear sum otherwise."""
    if not _is_skew(d):
        raise ValueError("weighting is not skew-symmetric")
    if not 0 < k <= d.n:
        raise ValueError(f"k must lie in 1..{d.n}")
    if k % 2:
        return Fraction(0)
    return sum(
        (L.signed_weight(d) for L in enumerate_linear_subdigraphs(d, k, even_only=True)),
        Fraction(0),
    )


def enumerate_digon_covers(d: WeightedDigraph, k: int) -> list[DigonCover]:
    """All sets of k/2 vertex-disjoint digons (matchings of the underlying graph)."""
    if k % 2:
        raise ValueError("digon covers need even k")
    if k <= 0:
        raise ValueError("k must be positive")
    edges = d.digons()
    out: list[DigonCover] = []

    def rec(start: int, used: frozenset[int], chosen: list[Arc]) -> None:
        if 2 * len(chosen) == k:
            out.append(DigonCover(tuple(chosen)))
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u not in used and v not in used:
                chosen.append(edges[i])
                rec(i + 1, used | {u, v}, chosen)
                chosen.pop()

    if k <= d.n:
        rec(0, frozenset(), [])
    return out


def digon_cover_sum(d: WeightedDigraph, k: int) -> Fraction:
    return sum((c.weight(d) for c in enumerate_digon_covers(d, k)), Fraction(0))



def is_skew_signing_of(d: WeightedDigraph, signed: WeightedDigraph) -> bool:
    """True when ``signed`` has |w'| = w arcwise and opposite signs on every digon."""
    if signed.n != d.n or set(signed.arcs) != set(d.arcs):
        return False
    for (u, v), w in d.arcs.items():
        s = signed.arcs[(u, v)]
        if abs(s) != w or s * signed.arcs.get((v, u), Fraction(0)) >= 0:
            return False
    return True


def partition_cycles_by_sign(
    d: WeightedDigraph, signed: WeightedDigraph, k: int
) -> tuple[list[Cycle], list[Cycle]]:
    """Split the length-k cycles by the sign of their product under ``signed``."""
    d.require_pwls()
    if not is_skew_signing_of(d, signed):
        raise ValueError("not a valid skew-signing of the digraph")
    plus: list[Cycle] = []
    minus: list[Cycle] = []
    for c in enumerate_cycles(d, k):
        if len(c) == k:
            (plus if c.weight(signed) > 0 else minus).append(c)
    return plus, minus
