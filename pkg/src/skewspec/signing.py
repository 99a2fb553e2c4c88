"""Skew-signings, the brute-force invariance oracle and the structural decider.

A skew-signing keeps every weight's magnitude and gives the two arcs of each
digon opposite signs. The structural test: all skew-signings share one
characteristic polynomial exactly when there is no even cycle of length at
least 4 and the weighting is cycle-symmetric (has a scaling certificate).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .charpoly import CharPolynomial, char_poly
from .graph import Arc, RationalMatrix, WeightedDigraph, from_graph, to_matrix
from .subdigraphs import (
    Cycle,
    digon_cover_sum,
    enumerate_cycles,
    enumerate_digon_covers,
    partition_cycles_by_sign,
)
from .symmetry import (
    CycleWitness,
    ScalingCertificate,
    build_scaling_certificate,
    cycle_symmetry_up_to,
)

DEFAULT_CAP = 20


class CapExceededError(ValueError):
    pass


class NotInvariantError(ValueError):
    def __init__(self, verdict: "InvarianceVerdict"):
        parts = []
        if verdict.even_cycle_witness is not None:
            parts.append(f"even cycle {list(verdict.even_cycle_witness.vertices)}")
        if verdict.asymmetry_witness is not None:
            w = verdict.asymmetry_witness
            parts.append(f"asymmetric cycle {list(w.cycle.vertices)} ({w.forward} vs {w.reverse})")
        super().__init__("skew-signings do not share a polynomial: " + ", ".join(parts))
        self.verdict = verdict


class HypothesisError(ValueError):
    pass


def default_cap() -> int:
    env = os.environ.get("SKEWSPEC_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class SkewSigning:
    """One sign per digon ``(u, v)``, ``u < v``: ``+1`` makes arc ``uv`` positive."""

    digons: tuple[Arc, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.digons) != len(self.signs):
            raise ValueError("one sign per digon")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def from_bits(cls, digons: Sequence[Arc], bits: str) -> "SkewSigning":
        if len(bits) != len(digons) or set(bits) - {"0", "1"}:
            raise ValueError(f"need a 0/1 string of length {len(digons)}, got {bits!r}")
        return cls(tuple(digons), tuple(1 if b == "1" else -1 for b in bits))

    @classmethod
    def all_plus(cls, d: WeightedDigraph) -> "SkewSigning":
        dg = tuple(d.digons())
        return cls(dg, (1,) * len(dg))

    @property
    def bits(self) -> str:
        return "".join("1" if s > 0 else "0" for s in self.signs)

    def flipped(self, index: int) -> "SkewSigning":
        signs = list(self.signs)
        signs[index] = -signs[index]
        return SkewSigning(self.digons, tuple(signs))

    def signed_digraph(self, d: WeightedDigraph) -> WeightedDigraph:
        """The weighting w' as a (non-pwls) weighted digraph."""
        if tuple(d.digons()) != self.digons or len(d.arcs) != 2 * len(self.digons):
            raise ValueError("signing does not match the digraph's digons")
        arcs = {}
        for (u, v), s in zip(self.digons, self.signs):
            arcs[(u, v)] = s * d.arcs[(u, v)]
            arcs[(v, u)] = -s * d.arcs[(v, u)]
        return WeightedDigraph(d.n, arcs)


def enumerate_skew_signings(d: WeightedDigraph, cap: int | None = None) -> Iterator[SkewSigning]:
    """All 2^m signings; the first is all-plus, then a descending binary counter."""
    d.require_pwls()
    cap = default_cap() if cap is None else cap
    digons = tuple(d.digons())
    if len(digons) > cap:
        raise CapExceededError(f"{len(digons)} digons exceeds cap {cap}")
    for bits in itertools.product("10", repeat=len(digons)):
        yield SkewSigning.from_bits(digons, "".join(bits))


def apply_signing(d: WeightedDigraph, s: SkewSigning) -> RationalMatrix:
    return to_matrix(s.signed_digraph(d))


@dataclass(frozen=True)
class BruteForceResult:
    invariant: bool
    polys: tuple[CharPolynomial, ...]  # distinct, sorted
    signings: int
    distinguishing_pair: tuple[SkewSigning, SkewSigning] | None

    def to_json(self) -> dict:
        pair = self.distinguishing_pair
        return {
            "invariant": self.invariant,
            "signings": self.signings,
            "distinct_polys": len(self.polys),
            "polys": [p.to_json() for p in self.polys],
            "distinguishing_pair": None if pair is None else [f"bits:{s.bits}" for s in pair],
        }


def brute_force_invariance(d: WeightedDigraph, cap: int | None = None) -> BruteForceResult:
    first: dict[CharPolynomial, SkewSigning] = {}
    count = 0
    for s in enumerate_skew_signings(d, cap):
        count += 1
        first.setdefault(char_poly(apply_signing(d, s)), s)
    polys = tuple(sorted(first, key=CharPolynomial.sort_key))
    pair = None
    if len(first) > 1:
        found = list(first.values())
        pair = (found[0], found[1])
    return BruteForceResult(len(first) == 1, polys, count, pair)


@dataclass(frozen=True)
class InvarianceVerdict:
    invariant: bool
    common_poly: CharPolynomial | None = None
    certificate: ScalingCertificate | None = None
    even_cycle_witness: Cycle | None = None
    asymmetry_witness: CycleWitness | None = None

    def to_json(self) -> dict:
        witness = None
        if not self.invariant:
            witness = {
                "even_cycle": self.even_cycle_witness.to_json()
                if self.even_cycle_witness
                else None,
                "asymmetric_cycle": self.asymmetry_witness.to_json()
                if self.asymmetry_witness
                else None,
            }
        return {
            "invariant": self.invariant,
            "common_poly": self.common_poly.to_json() if self.common_poly else None,
            "mu": self.certificate.to_json() if self.certificate else None,
            "witness": witness,
        }


def _digon_cover_poly(d: WeightedDigraph) -> CharPolynomial:
    coeffs = [
        digon_cover_sum(d, k) if k % 2 == 0 else Fraction(0) for k in range(1, d.n + 1)
    ]
    return CharPolynomial.from_coeffs(coeffs)


def _structure(d: WeightedDigraph) -> InvarianceVerdict:
    d.require_pwls()
    even = next((c for c in enumerate_cycles(d) if len(c) >= 4 and len(c) % 2 == 0), None)
    cert = build_scaling_certificate(d)
    if even is None and isinstance(cert, ScalingCertificate):
        return InvarianceVerdict(True, certificate=cert)
    return InvarianceVerdict(
        False,
        even_cycle_witness=even,
        asymmetry_witness=cert if isinstance(cert, CycleWitness) else None,
    )


def decide_invariance(d: WeightedDigraph) -> InvarianceVerdict:
    """Decide invariance from structure alone, without touching any signing.

    Both conditions are always evaluated, so a negative verdict reports every
    witness found.
    """
    v = _structure(d)
    if not v.invariant:
        return v
    return InvarianceVerdict(True, _digon_cover_poly(d), v.certificate)


def invariant_char_poly(d: WeightedDigraph) -> CharPolynomial:
    """x^n + sum over even k of (sum over digon covers of k vertices) x^(n-k)."""
    v = _structure(d)
    if not v.invariant:
        raise NotInvariantError(v)
    return _digon_cover_poly(d)


@dataclass(frozen=True)
class OrientationResult:
    all_same: bool
    distinct_poly_count: int
    polys: tuple[CharPolynomial, ...]


def orientations_of_graph(
    edges: Iterable[Sequence[int]], n: int, cap: int | None = None
) -> OrientationResult:
    """Compare skew-adjacency polynomials over every orientation of a simple graph."""
    r = brute_force_invariance(from_graph(edges, n), cap)
    return OrientationResult(r.invariant, len(r.polys), r.polys)


def signed_cycle_coefficient(d: WeightedDigraph, s: SkewSigning, q: int) -> Fraction:
    """b_q from the signs of the q-cycles under ``s`` (plus digon covers for even q).

    Valid when every cycle shorter than q matches its reversal and no even
    cycle has length in 4..q-1; both are checked.
    """
    d.require_pwls()
    if not 1 <= q <= d.n:
        raise ValueError(f"q must lie in 1..{d.n}")
    if q - 1 >= 2:
        sym = cycle_symmetry_up_to(d, q - 1)
        if not sym.is_cycle_symmetric:
            raise HypothesisError(
                f"not (<= {q - 1})-cycle-symmetric: cycle {sym.witness.cycle.to_json()}"
            )
    bad = next(
        (c for c in enumerate_cycles(d, q - 1) if len(c) >= 3 and len(c) % 2 == 0), None
    )
    if bad is not None:
        raise HypothesisError(f"even cycle {bad.to_json()} of length {len(bad)} < {q}")

    plus, minus = partition_cycles_by_sign(d, s.signed_digraph(d), q)
    total = -sum((c.weight(d) for c in plus), Fraction(0))
    total += sum((c.weight(d) for c in minus), Fraction(0))
    # At q = 2 the cycles are the digons themselves; adding covers would count them twice.
    if q % 2 == 0 and q > 2:
        total += sum((c.weight(d) for c in enumerate_digon_covers(d, q)), Fraction(0))
    return total
