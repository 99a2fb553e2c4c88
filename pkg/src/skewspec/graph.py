"""Weighted digraphs, rational matrices and the correspondence between them.

Vertices are the integers ``1..n``. A digraph stores a map from ordered
pairs to nonzero rational weights; a positive weighted loopless symmetric
(pwls) digraph additionally has positive weights and every arc paired with
its reverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .rational import RationalLike, to_rational

Arc = tuple[int, int]


class NotPwlsError(ValueError):
    """Raised by operations that are only defined on pwls digraphs."""


@dataclass(frozen=True)
class Violation:
    kind: str  # "loop" | "nonpositive" | "missing_reverse"
    arc: Arc
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"kind": v.kind, "arc": list(v.arc), "message": v.message}
                for v in self.violations
            ],
        }


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    n: int
    arcs: Mapping[Arc, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        clean: dict[Arc, Fraction] = {}
        for (u, v), w in self.arcs.items():
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) outside vertex range 1..{self.n}")
            w = to_rational(w)
            if w == 0:
                raise ValueError(f"zero weight on arc ({u},{v})")
            clean[(u, v)] = w
        object.__setattr__(self, "arcs", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(self, "_pwls", validate_pwls(self).ok)

    @classmethod
    def from_arcs(cls, n: int, arcs: Mapping[Arc, RationalLike]) -> "WeightedDigraph":
        return cls(n, dict(arcs))

    @property
    def pwls_validated(self) -> bool:
        return self._pwls  # type: ignore[attr-defined]

    def require_pwls(self) -> None:
        if not self.pwls_validated:
            report = validate_pwls(self)
            raise NotPwlsError(
                "not a pwls digraph: " + "; ".join(v.message for v in report.violations)
            )

    def weight(self, u: int, v: int) -> Fraction:
        """Weight of arc (u, v), or 0 when absent."""
        return self.arcs.get((u, v), Fraction(0))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, u: int) -> list[int]:
        return [v for (a, v) in self.arcs if a == u]

    def digons(self) -> list[Arc]:
        """Unordered digons ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for (u, v) in self.arcs if u < v and (v, u) in self.arcs]

    def underlying_edges(self) -> list[Arc]:
        return self.digons()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.n == other.n and dict(self.arcs) == dict(other.arcs)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.arcs.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}->{v}:{w}" for (u, v), w in self.arcs.items())
        return f"WeightedDigraph(n={self.n}, {{{body}}})"


def validate_pwls(d: WeightedDigraph) -> ValidationReport:
    found: list[Violation] = []
    for (u, v), w in d.arcs.items():
        if u == v:
            found.append(Violation("loop", (u, v), f"loop at ({u},{v})"))
        if w <= 0:
            found.append(Violation("nonpositive", (u, v), f"nonpositive weight on ({u},{v})"))
        if (v, u) not in d.arcs:
            found.append(
                Violation("missing_reverse", (v, u), f"missing reverse arc ({v},{u})")
            )
    return ValidationReport(tuple(found))


@dataclass(frozen=True)
class RationalMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError("matrix must be square with dimension n")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RationalMatrix":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls(n, tuple((Fraction(0),) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        """0-based entry access."""
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.n, tuple(zip(*self.entries)) if self.n else ())

    def is_skew_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.n)
            for j in range(i, self.n)
        )

    def permuted(self, perm: Sequence[int]) -> "RationalMatrix":
        """Simultaneous row/column permutation, i.e. P^T M P (0-based ``perm``)."""
        return RationalMatrix(
            self.n,
            tuple(
                tuple(self.entries[perm[i]][perm[j]] for j in range(self.n))
                for i in range(self.n)
            ),
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        n = self.n
        cols = list(zip(*other.entries))
        return RationalMatrix(
            n,
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
                for row in self.entries
            ),
        )

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]


def block_diagonal(*blocks: RationalMatrix) -> RationalMatrix:
    n = sum(b.n for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.n
    return RationalMatrix.from_rows(rows)


def to_matrix(d: WeightedDigraph) -> RationalMatrix:
    rows = [[Fraction(0)] * d.n for _ in range(d.n)]
    for (u, v), w in d.arcs.items():
        rows[u - 1][v - 1] = w
    return RationalMatrix.from_rows(rows)


def from_matrix(m: RationalMatrix) -> WeightedDigraph:
    # Diagonal entries become loops; only the pwls pathways reject them.
    arcs = {
        (i + 1, j + 1): m.entries[i][j]
        for i in range(m.n)
        for j in range(m.n)
        if m.entries[i][j] != 0
    }
    return WeightedDigraph(m.n, arcs)


def from_graph(edges: Iterable[Sequence[int]], n: int) -> WeightedDigraph:
    """Unit-weight pwls digraph with both arcs for every undirected edge."""
    arcs: dict[Arc, Fraction] = {}
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loops not allowed: edge {{{u},{v}}}")
        arcs[(u, v)] = Fraction(1)
        arcs[(v, u)] = Fraction(1)
    return WeightedDigraph(n, arcs)


def reweighted(d: WeightedDigraph, weights: Mapping[Arc, RationalLike]) -> WeightedDigraph:
    """Same arc set as ``d`` with new weights (every arc must be given)."""
    if set(weights) != set(d.arcs):
        raise ValueError("reweighting must assign exactly the arcs of d")
    return WeightedDigraph(d.n, dict(weights))

