"""Cycle symmetry and diagonal-similarity certificates.

A weighting is cycle-symmetric when every cycle has the same weight product
as its reversal. With positive reverse-pair products this is equivalent to
``A = D^-1 S D`` with ``S`` symmetric and ``D`` positive diagonal. We carry
``mu = D^2``, which stays rational: ``A`` is certified by
``a_ij * mu[j] == a_ji * mu[i]`` on every arc.

Square roots of weights are never formed exactly; the symmetrised weights
are returned as exact squares plus an advisory float view.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graph import Arc, RationalMatrix, WeightedDigraph, from_matrix
from .rational import format_rational
from .subdigraphs import Cycle, enumerate_cycles, is_skew_signing_of, reverse_cycle


@dataclass(frozen=True)
class ScalingCertificate:
    mu: tuple[Fraction, ...]  # mu[v - 1] is the squared scale of vertex v

    def __post_init__(self) -> None:
        if any(m <= 0 for m in self.mu):
            raise ValueError("certificate entries must be positive")

    def holds_for(self, d: WeightedDigraph) -> bool:
        mu = self.mu
        return len(mu) == d.n and all(
            w * mu[j - 1] == d.weight(j, i) * mu[i - 1] for (i, j), w in d.arcs.items()
        )

    def to_json(self) -> list[str]:
        return [format_rational(m) for m in self.mu]


@dataclass(frozen=True)
class CycleWitness:
    cycle: Cycle
    forward: Fraction
    reverse: Fraction

    def to_json(self) -> dict:
        return {
            "cycle": self.cycle.to_json(),
            "forward": format_rational(self.forward),
            "reverse": format_rational(self.reverse),
        }


@dataclass(frozen=True)
class SymmetryVerdict:
    is_cycle_symmetric: bool
    certificate: ScalingCertificate | None = None
    witness: CycleWitness | None = None
    # (i, j) where a_ij * a_ji > 0 or a_ij = a_ji = 0 fails; matrix checks only.
    pair_witness: Arc | None = None

    def to_json(self) -> dict:
        out = {
            "mu": self.certificate.to_json() if self.certificate else None,
            "witness": self.witness.to_json() if self.witness else None,
        }
        if self.pair_witness is not None:
            out["pair_witness"] = list(self.pair_witness)
        return out


def _cycle_witness(d: WeightedDigraph, c: Cycle) -> CycleWitness:
    return CycleWitness(c, c.weight(d), reverse_cycle(c).weight(d))


def _tree_path(parent: Mapping[int, int | None], a: int, b: int) -> list[int]:
    """Vertices on the spanning-tree path from a to b, inclusive."""
    up_a = [a]
    while parent[up_a[-1]] is not None:
        up_a.append(parent[up_a[-1]])
    up_b = [b]
    while parent[up_b[-1]] is not None:
        up_b.append(parent[up_b[-1]])
    anc_b = set(up_b)
    lca = next(x for x in up_a if x in anc_b)
    head = up_a[: up_a.index(lca) + 1]
    tail = up_b[: up_b.index(lca)]
    return head + tail[::-1]


def _certify(d: WeightedDigraph) -> ScalingCertificate | CycleWitness:
    # Arc support must be symmetric and a_ij * a_ji > 0 on it.
    mu: dict[int, Fraction] = {}
    parent: dict[int, int | None] = {}
    for root in range(1, d.n + 1):
        if root in mu:
            continue
        mu[root] = Fraction(1)
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in d.out_neighbors(u):
                if v != u and v not in mu:
                    mu[v] = mu[u] * d.arcs[(v, u)] / d.arcs[(u, v)]
                    parent[v] = u
                    queue.append(v)
    for (i, j), w in d.arcs.items():
        if w * mu[j] != d.arcs[(j, i)] * mu[i]:
            # Arc i->j plus the tree path j..i closes a cycle whose two
            # orientations have products in ratio (a_ij mu_j) / (a_ji mu_i).
            path = _tree_path(parent, j, i)
            return _cycle_witness(d, Cycle(tuple([i] + path[:-1])))
    return ScalingCertificate(tuple(mu[v] for v in range(1, d.n + 1)))


def build_scaling_certificate(d: WeightedDigraph) -> ScalingCertificate | CycleWitness:
    """Propagate ``mu`` over a BFS spanning forest, then check every arc.

    Roots are the lowest-index vertex of each component with ``mu = 1``.
    Returns the certificate, or a cycle whose two orientations disagree.
    """
    d.require_pwls()
    return _certify(d)


def check_matrix_cycle_symmetric(m: RationalMatrix) -> SymmetryVerdict:
    if any(m.entries[i][i] != 0 for i in range(m.n)):
        raise ValueError("matrix must have zero diagonal")
    for i in range(m.n):
        for j in range(i + 1, m.n):
            a, b = m.entries[i][j], m.entries[j][i]
            if not (a * b > 0 or a == b == 0):
                return SymmetryVerdict(False, pair_witness=(i + 1, j + 1))
    result = _certify(from_matrix(m))
    if isinstance(result, ScalingCertificate):
        return SymmetryVerdict(True, certificate=result)
    return SymmetryVerdict(False, witness=result)


def cycle_symmetry_up_to(d: WeightedDigraph, q: int) -> SymmetryVerdict:
    """Check w(C) == w(C*) for every cycle of length <= q.

    A certificate is attached only when ``q >= n`` (full cycle symmetry);
    a positive verdict for smaller ``q`` carries neither certificate nor witness.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    d.require_pwls()
    for c in enumerate_cycles(d, q):
        if len(c) > 2:
            fwd, rev = c.weight(d), reverse_cycle(c).weight(d)
            if fwd != rev:
                return SymmetryVerdict(False, witness=CycleWitness(c, fwd, rev))
    if q >= d.n:
        cert = _certify(d)
        if not isinstance(cert, ScalingCertificate):
            raise AssertionError(f"cycle check passed but certificate failed at {cert}")
        return SymmetryVerdict(True, certificate=cert)
    return SymmetryVerdict(True)


@dataclass(frozen=True)
class SymmetrizedWeights:
    squares: Mapping[Arc, Fraction]

    @property
    def floats(self) -> dict[Arc, float]:
        return {a: math.sqrt(s) for a, s in self.squares.items()}


def symmetrize(d: WeightedDigraph) -> SymmetrizedWeights:
    """Exact squares w(uv) * w(vu) of the geometric-mean weights."""
    d.require_pwls()
    return SymmetrizedWeights({(u, v): w * d.arcs[(v, u)] for (u, v), w in d.arcs.items()})


@dataclass(frozen=True)
class SignedSquares:
    """Per arc ``(sign, square)`` such that the real weight is ``sign * sqrt(square)``."""

    n: int
    entries: Mapping[Arc, tuple[int, Fraction]]

    def float_matrix(self) -> list[list[float]]:
        out = [[0.0] * self.n for _ in range(self.n)]
        for (u, v), (s, sq) in self.entries.items():
            out[u - 1][v - 1] = s * math.sqrt(sq)
        return out

    def is_skew_symmetric(self) -> bool:
        return all(
            self.entries[(v, u)] == (-s, sq) for (u, v), (s, sq) in self.entries.items()
        )


def skew_symmetrize(d: WeightedDigraph, signed: WeightedDigraph) -> SignedSquares:
    """Rescale a skew-signing to the skew-symmetric weighting with the same signs."""
    d.require_pwls()
    if not is_skew_signing_of(d, signed):
        raise ValueError("not a valid skew-signing of the digraph")
    return SignedSquares(
        d.n,
        {
            (u, v): (1 if signed.arcs[(u, v)] > 0 else -1, w * d.arcs[(v, u)])
            for (u, v), w in d.arcs.items()
        },
    )
