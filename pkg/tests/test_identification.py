from fractions import Fraction

import networkx as nx
import pytest

from helpers import lifted

from cagelift.analysis import degree_histogram, girth
from cagelift.constructions import build_K33
from cagelift.errors import BadM, NoRemotePair, NotCubic, WrongGirth
from cagelift.identification import IdentifySpec, corollary_order, identified_order, identify
from cagelift.voltage import SimpleGraph


@pytest.fixture(scope="module")
def heawood():
    return lifted("G6", 3)


@pytest.mark.parametrize("m, order", [(9, 14), (8, 14), (7, 16)])
def test_K33_orders(m, order):
    assert identify(IdentifySpec(build_K33(), 4, m)).n == order


@pytest.mark.parametrize("m", range(4, 13))
def test_K33_girth_and_degrees(m):
    out = identify(IdentifySpec(build_K33(), 4, m))
    assert out.n == identified_order(6, m)
    assert girth(out) == 4
    assert degree_histogram(out) == {3: out.n - 2, m: 2}


def test_heawood_m6(heawood):
    out = identify(IdentifySpec(heawood, 6, 6))
    assert out.n == 26 and girth(out) == 6
    assert degree_histogram(out) == {3: 24, 6: 2}


def test_tutte_coxeter_m6():
    out = identify(IdentifySpec(lifted("G8", 3), 8, 6))
    assert out.n == 58 and girth(out) == 8


def test_m3_returns_base(heawood):
    out = identify(IdentifySpec(heawood, 6, 3))
    assert out.n == 14
    assert degree_histogram(out) == {3: 14}


def test_labels_record_provenance():
    out = identify(IdentifySpec(build_K33(), 4, 7))
    assert out.labels[:2] == ("glue:x", "glue:y")
    assert "c0:a1" in out.labels and "c2:b2" in out.labels


def test_explicit_remote_pair():
    k = build_K33()
    out = identify(IdentifySpec(k, 4, 6, remote_pair=(1, 2)))
    assert out.labels[:2] == ("glue:a1", "glue:a2")
    with pytest.raises(NoRemotePair):
        identify(IdentifySpec(k, 4, 6, remote_pair=(0, 3)))


def test_errors():
    with pytest.raises(BadM):
        identify(IdentifySpec(build_K33(), 4, 2))
    with pytest.raises(WrongGirth):
        identify(IdentifySpec(build_K33(), 6, 6))
    petersen = SimpleGraph.from_edges(10, nx.petersen_graph().edges())
    with pytest.raises(WrongGirth):
        identify(IdentifySpec(petersen, 5, 6))
    cyc = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(NotCubic):
        identify(IdentifySpec(cyc, 6, 6))


def test_deleted_edge_choice():
    k = build_K33()
    out = identify(IdentifySpec(k, 4, 5, deleted_edge=(2, 5)))
    assert out.labels[:2] == ("glue:a2", "glue:b2")
    assert girth(out) == 4
    with pytest.raises(ValueError):
        identify(IdentifySpec(k, 4, 5, deleted_edge=(0, 1)))


@pytest.mark.parametrize(
    "case, m, value",
    [("g10", 9, 206), ("g12", 9, 374), ("g14", 10, 1388), ("g10", 3, 70), ("g12", 3, 126), ("g14", 3, 348)],
)
def test_corollary_examples(case, m, value):
    assert corollary_order(case, m) == value


@pytest.mark.parametrize("case, n_g", [("g10", 70), ("g12", 126), ("g14", 348)])
def test_corollary_matches_gluing(case, n_g):
    for m in range(3, 50):
        got = corollary_order(case, m)
        assert isinstance(got, Fraction)
        assert got == identified_order(n_g, m)


def test_corollary_errors():
    with pytest.raises(ValueError):
        corollary_order("g16", 9)
    with pytest.raises(BadM):
        corollary_order("g10", 2)
