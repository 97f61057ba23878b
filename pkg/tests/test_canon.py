import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from turanlab.canon import are_isomorphic, canonical_form, canonical_graph, canonical_label, orbits
from turanlab.graph import Graph


@given(graphs(max_n=10), st.data())
def test_label_invariant_under_relabelling(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_label(g.relabel(perm)) == canonical_label(g)


@given(graphs(max_n=8), graphs(max_n=8))
def test_agrees_with_networkx_isomorphism(a, b):
    if a.n != b.n:
        return
    na, nb = nx.Graph(a.edges()), nx.Graph(b.edges())
    na.add_nodes_from(range(a.n))
    nb.add_nodes_from(range(b.n))
    assert are_isomorphic(a, b) == nx.is_isomorphic(na, nb)


@given(graphs(max_n=9))
def test_generators_are_automorphisms(g):
    form = canonical_form(g)
    for gen in form.generators:
        assert g.relabel(gen) == g
    assert canonical_graph(g).edge_count == g.edge_count


def test_vertex_transitive_orbits():
    for g, count in ((Graph.cycle(7), 1), (Graph.star(4), 2), (Graph.path(5), 3)):
        assert len(set(orbits(g.n, canonical_form(g).generators))) == count


def test_colours_separate_classes():
    g = Graph.path(3)
    assert canonical_form(g, [0, 1, 0]).code != canonical_form(g, [1, 0, 0]).code
    assert canonical_form(g, [0, 1, 1]).code == canonical_form(g.relabel([2, 1, 0]), [1, 1, 0]).code


def test_strongly_regular_pair_distinguished():
    # Shrikhande and 4x4 rook's graph share parameters (16, 6, 2, 2)
    rook = nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4))
    rook = nx.convert_node_labels_to_integers(rook)
    shrikhande = nx.Graph()
    for a in range(4):
        for b in range(4):
            for da, db in ((0, 1), (1, 0), (1, 1)):
                shrikhande.add_edge(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4)
    g1, g2 = Graph.from_edges(16, rook.edges()), Graph.from_edges(16, shrikhande.edges())
    assert not are_isomorphic(g1, g2)
    assert are_isomorphic(g2, g2.relabel(list(reversed(range(16)))))
