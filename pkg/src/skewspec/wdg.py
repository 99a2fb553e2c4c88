"""Text formats: ``wdg`` weighted digraphs and ``edge`` lists.

wdg::

    wdg 1
    n 3
    arc 1 2 1/2
    arc 2 1 8

Serialization sorts arcs so a parse/serialize round trip is byte-identical.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

from .graph import Arc, WeightedDigraph
from .rational import format_rational, parse_rational

MAGIC = "wdg 1"


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(lineno, f"bad {what} {tok!r}") from None


def parse_wdg(text: str) -> WeightedDigraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != ["wdg", "1"]:
        raise ParseError(lines[0][0] if lines else 1, f"expected header {MAGIC!r}")
    if len(lines) < 2 or lines[1][1][0] != "n" or len(lines[1][1]) != 2:
        raise ParseError(lines[1][0] if len(lines) > 1 else lines[0][0], "expected 'n <int>'")
    n = _parse_int(lines[1][1][1], lines[1][0], "vertex count")
    if n < 0:
        raise ParseError(lines[1][0], "vertex count must be nonnegative")

    arcs: dict[Arc, Fraction] = {}
    for lineno, toks in lines[2:]:
        if toks[0] != "arc" or len(toks) != 4:
            raise ParseError(lineno, "expected 'arc <u> <v> <weight>'")
        u = _parse_int(toks[1], lineno, "vertex")
        v = _parse_int(toks[2], lineno, "vertex")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex out of range 1..{n}")
        try:
            w = parse_rational(toks[3])
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        if w == 0:
            raise ParseError(lineno, "zero weight")
        if (u, v) in arcs:
            raise ParseError(lineno, f"duplicate arc ({u},{v})")
        arcs[(u, v)] = w
    return WeightedDigraph(n, arcs)


def serialize_wdg(d: WeightedDigraph) -> str:
    out = [MAGIC, f"n {d.n}"]
    out += [f"arc {u} {v} {format_rational(w)}" for (u, v), w in sorted(d.arcs.items())]
    return "\n".join(out) + "\n"


def digest(d: WeightedDigraph) -> str:
    return "sha256:" + hashlib.sha256(serialize_wdg(d).encode("utf-8")).hexdigest()


def parse_edge_list(text: str) -> tuple[list[Arc], int]:
    """Parse ``edge <u> <v>`` lines with an optional ``n <int>`` line.

    Without an ``n`` line the vertex count is the largest index seen.
    """
    edges: list[Arc] = []
    n = None
    for lineno, toks in _content_lines(text):
        if toks[0] == "n" and len(toks) == 2:
            n = _parse_int(toks[1], lineno, "vertex count")
            continue
        if toks[0] != "edge" or len(toks) != 3:
            raise ParseError(lineno, "expected 'edge <u> <v>'")
        u = _parse_int(toks[1], lineno, "vertex")
        v = _parse_int(toks[2], lineno, "vertex")
        if u < 1 or v < 1:
            raise ParseError(lineno, "vertices are numbered from 1")
        if u == v:
            raise ParseError(lineno, "loops not allowed")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(0, f"edge endpoint {top} exceeds n={n}")
    return edges, n
