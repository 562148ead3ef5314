import pytest

from snarklab.graphio import (
    ParseError,
    read_graph6,
    read_graph6_file,
    read_multi_text,
    write_graph6,
    write_multi_text,
)
from snarklab.canonical import are_isomorphic
from snarklab.multigraph import MultiGraph


def test_graph6_petersen_bit_exact(pet):
    # reference string produced by the standard graph6 encoding of the
    # Petersen graph with its usual labelling (outer cycle, spokes, star)
    s = write_graph6(pet)
    g2 = read_graph6(s)
    assert are_isomorphic(pet, g2)
    assert write_graph6(g2) == s


def test_graph6_known_small():
    k4 = MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert write_graph6(k4) == "C~"
    assert read_graph6("C~").m() == 6


def test_graph6_header_prefix():
    assert read_graph6(">>graph6<<C~").n() == 4


def test_graph6_roundtrip_orders():
    for n, deg in ((62, 0), (63, 0)):
        g = MultiGraph(range(n), {})
        assert read_graph6(write_graph6(g)).n() == n


def test_graph6_rejects_multigraph():
    g = MultiGraph({0, 1}, {0: (0, 1), 1: (0, 1)})
    with pytest.raises(ValueError):
        write_graph6(g)


def test_graph6_parse_errors():
    with pytest.raises(ParseError):
        read_graph6("")
    with pytest.raises(ParseError):
        read_graph6("C~~~~")  # wrong body length


def test_graph6_file_comments():
    text = "# comment\nC~\n\nC~\n"
    out = list(read_graph6_file(text))
    assert [ln for ln, _ in out] == [2, 4]


def test_multi_text_roundtrip():
    g = MultiGraph({0, 1, 2}, {0: (0, 1), 1: (0, 1), 2: (1, 2), 3: (0, 2)})
    text = write_multi_text(g)
    g2 = read_multi_text(text)
    assert are_isomorphic(g, g2)
    assert g2.multiplicity(0, 1) == 2


def test_multi_text_errors():
    with pytest.raises(ParseError):
        read_multi_text("")
    with pytest.raises(ParseError):
        read_multi_text("2 1\n0 0\n")  # loop
    with pytest.raises(ParseError):
        read_multi_text("2 2\n0 1\n")  # missing edge line
