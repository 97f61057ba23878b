import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from turanlab.errors import Graph6Error
from turanlab.graph import (Graph, from_adjacency_text, from_graph6, parse_graph, to_adjacency_text,
                            to_graph6)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_known_encodings():
    assert to_graph6(Graph.complete(3)) == "Bw"
    assert to_graph6(Graph.complete_multipartite([3, 2])) == "DFw"
    assert to_graph6(Graph.empty(0)) == "?"


def test_rejects_self_loop_and_asymmetry():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


@pytest.mark.parametrize("bad", ["", "A~", "Bx", "B", "\x01"])
def test_bad_graph6(bad):
    with pytest.raises(Graph6Error):
        from_graph6(bad)


def test_header_and_long_form():
    g = Graph.cycle(64)  # n >= 63 needs the 4-byte length form
    text = to_graph6(g)
    assert text.startswith("~?@?")
    assert from_graph6(">>graph6<<" + text) == g
    assert to_graph6(from_graph6(text)) == text


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
    assert to_graph6(g) == expected
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=9))
def test_adjacency_text_roundtrip(g):
    assert from_adjacency_text(to_adjacency_text(g)) == g
    assert parse_graph(to_adjacency_text(g)) == g
    assert parse_graph(to_graph6(g) + "\n") == g


@given(graphs(max_n=9), st.data())
def test_relabel_preserves_structure(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = g.relabel(perm)
    assert h.edge_count == g.edge_count
    assert sorted(h.degree(v) for v in range(h.n)) == sorted(g.degree(v) for v in range(g.n))
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


@given(graphs(max_n=9))
def test_complement_and_components(g):
    c = g.complement()
    assert g.edge_count + c.edge_count == g.n * (g.n - 1) // 2
    assert c.complement() == g
    assert len(g.components()) == nx.number_connected_components(to_nx(g)) if g.n else True


def test_constructors():
    assert Graph.complete(5).edge_count == 10
    assert Graph.cycle(5).edge_count == 5
    assert Graph.path(4).edge_count == 3
    assert Graph.star(4).degree(0) == 4
    assert Graph.complete_multipartite([2, 2, 2]).edge_count == 12
