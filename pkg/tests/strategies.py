from fractions import Fraction
from itertools import combinations

import hypothesis.strategies as st

from skewspec.graph import RationalMatrix, WeightedDigraph

small_rationals = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=9)
)
positive_rationals = st.builds(
    Fraction, st.integers(min_value=1, max_value=9), st.integers(min_value=1, max_value=9)
)


@st.composite
def matrices(draw, max_n=5, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    entry = st.one_of(st.just(Fraction(0)), small_rationals)
    rows = [[draw(entry) for _ in range(n)] for _ in range(n)]
    return RationalMatrix.from_rows(rows)


@st.composite
def skew_matrices(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        x = draw(st.one_of(st.just(Fraction(0)), small_rationals))
        rows[i][j], rows[j][i] = x, -x
    return RationalMatrix.from_rows(rows)


@st.composite
def graphs(draw, max_n=5, min_n=2):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return sorted(edges), n


@st.composite
def pwls_digraphs(draw, max_n=5, min_n=2):
    edges, n = draw(graphs(max_n=max_n, min_n=min_n))
    arcs = {}
    for u, v in edges:
        arcs[(u, v)] = draw(positive_rationals)
        arcs[(v, u)] = draw(positive_rationals)
    return WeightedDigraph(n, arcs)


@st.composite
def cycle_symmetric_digraphs(draw, max_n=5, min_n=2):
    """a_uv = s_uv * t_v / t_u with s symmetric positive."""
    edges, n = draw(graphs(max_n=max_n, min_n=min_n))
    t = [None] + [draw(positive_rationals) for _ in range(n)]
    arcs = {}
    for u, v in edges:
        s = draw(positive_rationals)
        arcs[(u, v)] = s * t[v] / t[u]
        arcs[(v, u)] = s * t[u] / t[v]
    return WeightedDigraph(n, arcs)
