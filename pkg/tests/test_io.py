import io

import pytest

from sunfinder import families as F
from sunfinder.graph import from_edges
from sunfinder.io import ParseError, parse_graph, parse_ordering, parse_text, serialize

from conftest import STRONGLY_CHORDAL_FIXTURES


def test_edge_list_house():
    gf = parse_text("5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n")
    assert gf.graph == F.house() and gf.format == "edge-list" and not gf.warnings


def test_dimacs():
    gf = parse_text("p edge 3 2\ne 1 2\ne 2 3\n")
    assert gf.graph == F.path(3) and gf.format == "dimacs"
    gf = parse_text("c empty\np edge 4 0\n")
    assert gf.graph == from_edges(4, [])


def test_comments_and_blank_lines():
    gf = parse_text("# a triangle\n3 3\n\n0 1  # first\n1 2\n2 0\n")
    assert gf.graph == F.complete(3)


def test_duplicate_edge_warns():
    gf = parse_text("3 3\n0 1\n1 0\n1 2\n")
    assert gf.graph.m == 2
    assert any("line 3" in w and "duplicate" in w for w in gf.warnings)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 1 2\n", 2),
        ("3 2\n0 1\n1 7\n", 3),
        ("3 1\n1 1\n", 2),
        ("x 1\n", 1),
        ("p edge 3 1\ne 0 1\n", 2),
        ("p edge 3 1\nq 1 2\n", 2),
    ],
)
def test_malformed_lines_report_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_text(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(ParseError):
        parse_text("")
    with pytest.raises(ParseError):
        parse_text("e 1 2\n", "dimacs")


def test_labels():
    gf = parse_text("4 3\nalice bob\nbob carol\ncarol alice\n")
    assert gf.labels[:3] == ["alice", "bob", "carol"] and gf.graph.m == 3
    assert gf.graph.degree(3) == 0
    assert parse_ordering(["carol", "alice", "bob", "_3"], gf) == [2, 0, 1, 3]
    with pytest.raises(ParseError, match="unknown label"):
        gf.vertex("dave")
    with pytest.raises(ParseError):
        parse_text("2 2\na b\nc d\n")


def test_dimacs_ordering_tokens_are_one_based():
    gf = parse_text("p edge 3 2\ne 1 2\ne 2 3\n")
    assert parse_ordering(["3", "1", "2"], gf) == [2, 0, 1]


def test_round_trip_on_fixtures():
    graphs = [F.house(), F.domino(), F.gem(), F.bull(), F.sun(3), F.sun(5), F.cycle_power(9, 2), from_edges(3, [])]
    graphs += list(STRONGLY_CHORDAL_FIXTURES.values())
    for G in graphs:
        for fmt in ("edge-list", "dimacs"):
            text = serialize(G, fmt)
            assert parse_text(text).graph == G
            assert parse_text(text, fmt).graph == G


def test_parse_from_stream_and_path(tmp_path):
    assert parse_graph(io.StringIO("2 1\n0 1\n")).graph.m == 1
    path = tmp_path / "g.txt"
    path.write_text(serialize(F.gem()))
    assert parse_graph(path).graph == F.gem()
