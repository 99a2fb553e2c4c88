from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from skewspec.graph import (
    NotPwlsError,
    RationalMatrix,
    WeightedDigraph,
    from_graph,
    from_matrix,
    reweighted,
    to_matrix,
    validate_pwls,
)
from skewspec.rational import format_rational, parse_rational, to_rational

from strategies import graphs, matrices, pwls_digraphs, small_rationals


class TestRational:
    @pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-4/6", Fraction(-2, 3)), ("+1/2", Fraction(1, 2))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["2/0", "1.5", "1e3", "", "a/b", "1/-2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_canonical_form(self):
        x = to_rational("6") / -4
        assert (x.numerator, x.denominator) == (-3, 2)
        assert format_rational(x) == "-3/2"

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            to_rational(0.5)

    @given(small_rationals, small_rationals, small_rationals)
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == 0
        if a != 0:
            assert a * (1 / a) == 1
        assert parse_rational(format_rational(a)) == a


class TestValidate:
    def test_unit_digon_ok(self):
        assert validate_pwls(WeightedDigraph(2, {(1, 2): 1, (2, 1): 1})).ok

    def test_missing_reverse(self):
        report = validate_pwls(WeightedDigraph(2, {(1, 2): 1}))
        assert [v.message for v in report.violations] == ["missing reverse arc (2,1)"]

    def test_nonpositive(self):
        report = validate_pwls(WeightedDigraph(2, {(1, 2): 1, (2, 1): -1}))
        assert [v.message for v in report.violations] == ["nonpositive weight on (2,1)"]

    def test_loop(self):
        d = WeightedDigraph(1, {(1, 1): 1})
        assert [v.kind for v in validate_pwls(d).violations] == ["loop"]
        assert not d.pwls_validated
        with pytest.raises(NotPwlsError):
            d.require_pwls()

    def test_structural_errors(self):
        with pytest.raises(ValueError):
            WeightedDigraph(2, {(1, 3): 1})
        with pytest.raises(ValueError):
            WeightedDigraph(2, {(1, 2): 0})

    @given(pwls_digraphs())
    def test_positive_reweighting_of_graph_is_pwls(self, d):
        assert validate_pwls(d).ok and d.pwls_validated
        g = from_graph(d.digons(), d.n)
        assert reweighted(g, d.arcs) == d

    @given(pwls_digraphs(), st.data())
    def test_breaking_symmetry_is_caught(self, d, data):
        if not d.arcs:
            return
        arc = data.draw(st.sampled_from(sorted(d.arcs)))
        broken = dict(d.arcs)
        del broken[arc]
        assert not validate_pwls(WeightedDigraph(d.n, broken)).ok


class TestMatrices:
    def test_to_matrix_examples(self):
        assert to_matrix(from_graph([(1, 2)], 2)) == RationalMatrix.from_rows([[0, 1], [1, 0]])
        assert to_matrix(WeightedDigraph(3)) == RationalMatrix.zeros(3)
        assert to_matrix(WeightedDigraph(2, {(1, 2): 2, (2, 1): 3})) == RationalMatrix.from_rows(
            [[0, 2], [3, 0]]
        )

    def test_from_matrix_examples(self):
        assert from_matrix(RationalMatrix.from_rows([[0, 2], [3, 0]])) == WeightedDigraph(
            2, {(1, 2): 2, (2, 1): 3}
        )
        assert from_matrix(RationalMatrix.zeros(2)).arcs == {}
        loop = from_matrix(RationalMatrix.from_rows([[1, 0], [0, 0]]))
        assert dict(loop.arcs) == {(1, 1): 1} and not loop.pwls_validated

    @given(matrices(max_n=6))
    def test_matrix_round_trip(self, m):
        assert to_matrix(from_matrix(m)) == m

    @given(pwls_digraphs())
    def test_digraph_round_trip(self, d):
        assert from_matrix(to_matrix(d)) == d


class TestFromGraph:
    def test_path(self):
        d = from_graph([(1, 2), (2, 3)], 3)
        assert len(d.arcs) == 4 and set(d.arcs.values()) == {1}

    def test_triangle(self):
        assert len(from_graph([(1, 2), (2, 3), (3, 1)], 3).arcs) == 6

    def test_empty(self):
        d = from_graph([], 2)
        assert d.pwls_validated and not d.arcs

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loops not allowed"):
            from_graph([(1, 1)], 1)

    @given(graphs())
    def test_always_pwls(self, g):
        edges, n = g
        assert from_graph(edges, n).pwls_validated
