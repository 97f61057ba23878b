import random

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms import isomorphism

from conftest import graphs
from turanlab.graph import Graph
from turanlab.subgraph import (arc_orbit_representatives, contains_subgraph,
                               contains_subgraph_through_edge)


def nx_contains(host, pattern):
    h = nx.Graph(host.edges())
    h.add_nodes_from(range(host.n))
    p = nx.Graph(pattern.edges())
    p.add_nodes_from(range(pattern.n))
    return isomorphism.GraphMatcher(h, p).subgraph_is_monomorphic()


def test_examples():
    assert contains_subgraph(Graph.complete(4), Graph.complete(3))
    assert not contains_subgraph(Graph.complete_multipartite([3, 3]), Graph.complete(3))
    assert contains_subgraph(Graph.complete_multipartite([3, 3]), Graph.cycle(6))
    assert not contains_subgraph(Graph.cycle(5), Graph.cycle(4))
    assert contains_subgraph(Graph.path(2), Graph.empty(0))


@given(graphs(max_n=8), graphs(min_n=1, max_n=5))
def test_agrees_with_networkx(host, pattern):
    assert contains_subgraph(host, pattern) == nx_contains(host, pattern)


def test_dense_multipartite_hosts():
    rng = random.Random(5)
    for _ in range(60):
        host = Graph.complete_multipartite([rng.randint(1, 4) for _ in range(rng.randint(2, 4))])
        for u, v in rng.sample(host.edges(), min(3, host.edge_count)):
            host = host.remove_edge(u, v)
        pattern = Graph.from_edges(5, [e for e in Graph.complete(5).edges() if rng.random() < 0.6])
        assert contains_subgraph(host, pattern) == nx_contains(host, pattern)


@given(graphs(min_n=2, max_n=8), graphs(min_n=2, max_n=5), st.data())
def test_through_edge_means_new_copy(g, pattern, data):
    if g.edge_count == 0 or pattern.edge_count == 0:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    through = contains_subgraph_through_edge(g, pattern, u, v)
    if through:
        assert contains_subgraph(g, pattern)
    if not contains_subgraph(g.remove_edge(u, v), pattern):
        assert through == contains_subgraph(g, pattern)
    arcs = arc_orbit_representatives(pattern)
    assert contains_subgraph_through_edge(g, pattern, u, v, arcs) == through
