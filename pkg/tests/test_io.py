import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import CONSTRUCTIONS, construction, lifted, random_simple_graph, random_voltage_graph, to_networkx

from cagelift.analysis import girth
from cagelift.constructions import build_G6, build_K33
from cagelift.errors import (
    MalformedHeader,
    NonPrintableChar,
    ParseError,
    PinnedToPinnedArc,
    TruncatedBits,
    UnknownEndpoint,
)
from cagelift.io import (
    export_dot,
    read_edge_list,
    read_graph6,
    read_graph6_file,
    read_voltage_graph,
    write_edge_list,
    write_graph6,
    write_voltage_graph,
)
from cagelift.voltage import SimpleGraph


def nx_graph6(g):
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()


@pytest.mark.parametrize("text", ["D?{", "DQc", "?", "@", "A_", "Bw", "E?Bw"])
def test_graph6_string_round_trip(text):
    assert write_graph6(read_graph6(text)) == text


def test_K33_round_trip():
    g = read_graph6(write_graph6(build_K33()))
    assert (g.n, g.size, girth(g)) == (6, 9, 4)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_graph6_agrees_with_networkx(seed):
    g = random_simple_graph(random.Random(seed), max_n=70)
    text = write_graph6(g)
    assert text == nx_graph6(g)
    assert read_graph6(text).adjacency == g.adjacency


def test_graph6_large_header():
    g = lifted("G12", 5)
    text = write_graph6(g)
    assert text.startswith("~") and text == nx_graph6(g)
    assert read_graph6(">>graph6<<" + text + "\n").adjacency == g.adjacency


def test_graph6_size_field():
    from cagelift.io import _encode_n

    assert _encode_n(62) == "}"
    assert _encode_n(63) == "~??~"
    assert _encode_n(258047) == "~}~~"  # a second "~" would announce the 8-byte form
    with pytest.raises(ValueError):
        _encode_n(258048)
    g = SimpleGraph.from_edges(300, [(0, 299)])
    assert read_graph6(write_graph6(g)).edges() == [(0, 299)]


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", MalformedHeader),
        ("~?", MalformedHeader),
        ("~~???", MalformedHeader),
        ("D?", TruncatedBits),
        ("D?{?", MalformedHeader),
        ("D? {", NonPrintableChar),
        ("D\x01{", NonPrintableChar),
    ],
)
def test_graph6_errors(text, exc):
    with pytest.raises(exc):
        read_graph6(text)


def test_truncated_lift():
    text = write_graph6(lifted("G10", 4))
    with pytest.raises(TruncatedBits):
        read_graph6(text[:-2])


def test_graph6_file():
    text = write_graph6(build_K33()) + "\n\n" + write_graph6(lifted("G6", 3)) + "\n"
    assert [g.n for g in read_graph6_file(text)] == [6, 14]


@pytest.mark.parametrize("name", [c[0] for c in CONSTRUCTIONS])
def test_voltage_round_trip_named(name):
    g = construction(name)
    text = write_voltage_graph(g)
    back = read_voltage_graph(text)
    assert back == g and write_voltage_graph(back) == text


def test_G10_serialization_counts():
    lines = write_voltage_graph(construction("G10")).splitlines()
    assert sum(line.startswith("vertex ") for line in lines) == 26
    assert sum(line.startswith("arc ") for line in lines) == 37
    assert lines[0] == "# G10"


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_voltage_round_trip_random(seed):
    g = random_voltage_graph(random.Random(seed), multi=True)
    text = write_voltage_graph(g)
    assert write_voltage_graph(read_voltage_graph(text)) == text


def test_voltage_comments_and_blank_lines():
    text = "# two lines\n# of description\n\nvertex a\n# stray\nvertex b\n\narc a b -3\n"
    g = read_voltage_graph(text)
    assert g.description == "two lines\nof description"
    assert write_voltage_graph(g) == "# two lines\n# of description\nvertex a\nvertex b\narc a b -3\n"


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("vertex x* pinned\nvertex y* pinned\narc x* y* 0\n", PinnedToPinnedArc, 3),
        ("vertex a\n\narc a b 1\n", UnknownEndpoint, 3),
        ("vertex a\nedge a a 1\n", ParseError, 2),
        ("vertex a\narc a a one\n", ParseError, 2),
        ("vertex a extra words\n", ParseError, 1),
    ],
)
def test_voltage_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        read_voltage_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_edge_list_round_trip():
    g = lifted("G6", 3)
    back = read_edge_list(write_edge_list(g))
    assert back.adjacency == g.adjacency
    assert read_edge_list("0 1\n1 2  # comment\n").n == 3
    with pytest.raises(ParseError):
        read_edge_list("n 3\n0 x\n")


def test_dot_voltage_graph():
    dot = export_dot(build_G6(1, 2))
    assert dot.count("shape=box") == 2
    assert dot.count("label=") == 2
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")


def test_dot_lift_and_empty():
    dot = export_dot(lifted("G6", 3))
    assert sum(1 for line in dot.splitlines() if "[label=" in line) == 14
    assert export_dot(SimpleGraph.from_edges(0, [])) == "graph lift {\n}\n"
    assert export_dot(lifted("G6", 3)) == dot
