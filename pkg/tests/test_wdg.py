import pytest
from hypothesis import given

from skewspec.graph import WeightedDigraph
from skewspec.wdg import ParseError, digest, parse_edge_list, parse_wdg, serialize_wdg

from strategies import pwls_digraphs


def test_parse_with_comments_and_fractions():
    d = parse_wdg("# hi\nwdg 1\n\nn 2\narc 2 1 8\n# arc list\narc 1 2 1/2\n")
    assert d == WeightedDigraph(2, {(1, 2): "1/2", (2, 1): 8})


def test_canonical_serialization_sorts_arcs():
    d = parse_wdg("wdg 1\nn 2\narc 2 1 8\narc 1 2 2/4\n")
    assert serialize_wdg(d) == "wdg 1\nn 2\narc 1 2 1/2\narc 2 1 8\n"


@given(pwls_digraphs())
def test_round_trip_is_byte_identical(d):
    text = serialize_wdg(d)
    assert parse_wdg(text) == d
    assert serialize_wdg(parse_wdg(text)) == text


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("wdg 2\nn 1\n", 1),
        ("wdg 1\nm 1\n", 2),
        ("wdg 1\nn 2\narc 1 2 2/0\n", 3),
        ("wdg 1\nn 2\narc 1 2 1.5\n", 3),
        ("wdg 1\nn 2\narc 1 3 1\n", 3),
        ("wdg 1\nn 2\narc 1 2 0\n", 3),
        ("wdg 1\nn 2\narc 1 2 1\narc 1 2 1\n", 4),
        ("wdg 1\nn 2\nedge 1 2\n", 3),
    ],
)
def test_parse_errors_name_the_line(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_wdg(text)
    assert exc.value.lineno == lineno
    assert str(exc.value).startswith(f"line {lineno}:")


def test_digest_ignores_arc_order():
    a = parse_wdg("wdg 1\nn 2\narc 1 2 1\narc 2 1 1\n")
    b = parse_wdg("wdg 1\nn 2\narc 2 1 1\narc 1 2 1\n")
    assert digest(a) == digest(b)


def test_edge_list():
    assert parse_edge_list("edge 1 2\n# c\nedge 2 3\n") == ([(1, 2), (2, 3)], 3)
    assert parse_edge_list("n 5\nedge 1 2\n") == ([(1, 2)], 5)
    with pytest.raises(ParseError):
        parse_edge_list("edge 1 1\n")
