"""Structural invariants checked over generated inputs."""
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from turanlab.certificates import check_k_good, critical_edges, r_partite_distance
from turanlab.constructions import (ahs_value, chvatal_hanson, extremal_member, fan, gadget_vertices,
                                    smallest_valid_n, turan_edge_count, turan_graph)
from turanlab.graph import Graph, bits
from turanlab.invariants import chromatic_number
from turanlab.subgraph import contains_subgraph


@given(st.integers(1, 64), st.integers(2, 8))
def test_turan_edge_count(n, r):
    assert turan_graph(n, r)[0].edge_count == turan_edge_count(n, r)


@given(st.integers(1, 4), st.integers(2, 5))
def test_fan_clique_structure(k, r):
    g = fan(k, r)
    assert contains_subgraph(g, Graph.complete(r))
    assert not contains_subgraph(g, Graph.complete(r + 1))


@given(st.integers(2, 6))
def test_closed_form(k):
    assert chvatal_hanson(k - 1, k - 1) == ahs_value(k)


valid_points = st.sampled_from([(k, r) for k in range(1, 5) for r in range(2, 5)
                                if smallest_valid_n(k, r) <= 24]).flatmap(
    lambda kr: st.integers(smallest_valid_n(*kr), 24).map(lambda n: (n, *kr)))


@given(valid_points)
def test_extremal_member_shape(point):
    n, k, r = point
    g, p = extremal_member(n, k, r)
    assert check_k_good(g, p, k).ok
    for i, cls in enumerate(p.classes):
        if i:
            assert g.edges_in(cls) == 0
        for v in bits(cls):
            assert g.adj[v] & ~cls == g.vertex_mask & ~cls
    assert g.edges_in(p.classes[0]) == chvatal_hanson(k - 1, k - 1)
    assert gadget_vertices(k) <= p.classes[0].bit_count()


@given(graphs(max_n=8), st.integers(1, 4))
def test_distance_zero_iff_colourable(g, r):
    assert (r_partite_distance(g, r).distance == 0) == (chromatic_number(g) <= r)


@given(st.integers(2, 6))
def test_cliques_are_edge_critical(r):
    k = Graph.complete(r)
    assert critical_edges(k) == k.edges()


@given(graphs(min_n=1, max_n=7))
def test_no_critical_edge_means_deletions_keep_chi(g):
    chi = chromatic_number(g)
    crit = set(critical_edges(g))
    for e in g.edges():
        assert (chromatic_number(g.remove_edge(*e)) == chi) == (e not in crit)
