from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from turanlab.certificates import (check_k_good, check_suspension_lift, critical_edges, excess_of,
                                   excess_subgraph, find_k_good, intra_class_edges, is_edge_critical,
                                   local_max_cut, r_partite_distance)
from turanlab.constructions import chvatal_hanson, extremal_member, fan, turan_graph
from turanlab.errors import BadPartition, NotCriticalEdge
from turanlab.graph import Graph
from turanlab.partition import RPartition
from turanlab.sampling import planted_k_good, rng_for


def all_labelings(n, r):
    for labels in product(range(r), repeat=n):
        if len(set(labels)) == r:
            yield list(labels)


def test_critical_edge_examples():
    assert len(critical_edges(Graph.cycle(5))) == 5
    assert critical_edges(Graph.cycle(4)) == []  # removing an edge leaves a bipartite path
    assert is_edge_critical(Graph.complete(4))
    assert critical_edges(Graph.empty(3)) == []
    # K4 with a pendant edge: the pendant edge is not critical
    g = Graph.complete(4).add_vertex(1)
    assert (0, 4) not in critical_edges(g) and len(critical_edges(g)) == 6


def test_lift_examples():
    assert check_suspension_lift(Graph.cycle(5), (0, 1))
    assert check_suspension_lift(Graph.complete(2), (0, 1))
    with pytest.raises(NotCriticalEdge):
        check_suspension_lift(Graph.cycle(5), (0, 2))
    with pytest.raises(NotCriticalEdge):
        check_suspension_lift(Graph.complete(4).add_vertex(1), (0, 4))


def test_k_good_examples():
    g, p = extremal_member(12, 3, 2)
    assert check_k_good(g, p, 3).ok
    assert not check_k_good(g, p, 2).ok
    moved = p.move(11, 0)
    rep = check_k_good(g, moved, 3)
    assert not rep.ok and rep.violated.condition == "i"
    with pytest.raises(BadPartition):
        check_k_good(g, RPartition.from_labels([0] * 5 + [1] * 5), 3)


def test_k_good_condition_iii():
    # bowtie with the centre alone: the centre sees a perfect matching on each side
    g = fan(2, 3)
    p = RPartition.from_lists(5, [[0], [1, 2, 3, 4]])
    rep = check_k_good(g, p, 2)
    assert not rep.ok and rep.violated.condition in {"i", "ii", "iii"}


@given(graphs(min_n=2, max_n=7), st.integers(1, 3), st.integers(2, 3))
def test_find_k_good_is_exact(g, k, r):
    found = find_k_good(g, k, r, mode="exact")
    brute = any(check_k_good(g, RPartition.from_labels(l, r), k).ok for l in all_labelings(g.n, r)) \
        if g.n >= r else False
    assert (found is not None) == brute
    if found is not None:
        assert check_k_good(g, found, k).ok


def test_find_k_good_examples():
    assert find_k_good(Graph.complete(5), 1, 2) is None
    g, _ = extremal_member(12, 3, 2)
    assert check_k_good(g, find_k_good(g, 3, 2), 3).ok
    assert find_k_good(g, 3, 2, mode="heuristic") is not None


@given(graphs(min_n=2, max_n=8), st.integers(2, 3))
def test_distance_matches_bruteforce(g, r):
    res = r_partite_distance(g, r)
    best = min(intra_class_edges(g, l) for l in product(range(r), repeat=g.n))
    assert res.exact and res.distance == best
    assert intra_class_edges(g, res.partition.labels()) == best


def test_distance_examples():
    assert r_partite_distance(turan_graph(9, 3)[0], 3).distance == 0
    assert r_partite_distance(Graph.complete(4), 2).distance == 2
    assert r_partite_distance(extremal_member(12, 3, 2)[0], 2).distance == chvatal_hanson(2, 2)


def test_local_max_cut_is_locally_optimal():
    g = Graph.complete(6)
    labels = local_max_cut(g, 2)
    assert intra_class_edges(g, labels) == 6


def brute_excess(g, p):
    best, best_sets = None, []
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            m = sum(1 << v for v in combo)
            x = excess_of(g, p, m)
            if best is None or x > best:
                best, best_sets = x, [m]
            elif x == best:
                best_sets.append(m)
    return best, best_sets


def test_excess_examples():
    g, p = turan_graph(8, 2)
    res = excess_subgraph(g, p, 1)
    assert res.subgraph_vertices == () and res.excess == 0
    g2 = g.add_edge(0, 1)
    res = excess_subgraph(g2, p, 2)
    assert res.subgraph_vertices == (0, 1) and res.excess == 1
    g3, p3 = extremal_member(12, 3, 2)
    res = excess_subgraph(g3, p3, 3)
    assert len(res.subgraph_vertices) == 6 and res.excess == 6
    assert res.bound_i and res.degree_ii and res.strict_iii


def test_excess_not_applicable_without_k_good():
    g = Graph.complete(4)
    p = RPartition.from_labels([0, 0, 1, 1])
    res = excess_subgraph(g, p, 1)
    assert res.bound_i is None and res.to_dict()["i"] == "not applicable"


@given(graphs(min_n=1, max_n=8), st.data())
def test_excess_matches_bruteforce(g, data):
    labels = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    p = RPartition.from_labels(labels, 2)
    res = excess_subgraph(g, p)
    best, sets = brute_excess(g, p)
    assert res.excess == best and res.mask in sets
    # inclusion-minimal: no proper subset of the answer also attains the maximum
    assert not any(s != res.mask and s & ~res.mask == 0 for s in sets)


def test_planted_partitions_are_k_good():
    rng = rng_for(11)
    for _ in range(20):
        n, k = int(rng.integers(4, 12)), int(rng.integers(1, 4))
        g, p = planted_k_good(rng, n, k, 2)
        assert check_k_good(g, p, k).ok
