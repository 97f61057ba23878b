import pytest
from hypothesis import given
from hypothesis import strategies as st

from turanlab.canon import are_isomorphic
from turanlab.constructions import (SuspensionSpec, ahs_gadget, ahs_value, chvatal_hanson,
                                    extremal_family, extremal_member, fan, gadget_family,
                                    smallest_valid_n, suspension, turan_class_sizes,
                                    turan_edge_count, turan_graph)
from turanlab.errors import ClassTooSmall, EmptySpec, InvalidR
from turanlab.graph import Graph
from turanlab.invariants import max_degree, matching_number


def test_turan_examples():
    assert turan_class_sizes(7, 3) == [3, 2, 2]
    g, p = turan_graph(5, 2)
    assert g.edge_count == 6 and p.sizes() == [3, 2]
    assert turan_edge_count(9, 3) == 27
    with pytest.raises(InvalidR):
        turan_graph(5, 1)


@given(st.integers(1, 30), st.integers(2, 6))
def test_turan_is_balanced_and_counted(n, r):
    g, p = turan_graph(n, r)
    sizes = p.sizes()
    assert sum(sizes) == n and max(sizes) - min(sizes) <= 1
    assert g.edge_count == turan_edge_count(n, r)
    assert g == Graph.complete_multipartite(sizes)


def test_suspension_and_fan():
    assert are_isomorphic(suspension([Graph.complete(2)] * 2), fan(2, 3))
    assert fan(3, 3).edge_count == 9 and fan(3, 3).n == 7
    assert are_isomorphic(fan(1, 4), Graph.complete(4))
    s = suspension(SuspensionSpec((Graph.cycle(5),)))
    assert s.degree(0) == 5 and s.edge_count == 10
    with pytest.raises(EmptySpec):
        SuspensionSpec(())


@pytest.mark.parametrize("nu,delta,value", [(0, 5, 0), (1, 1, 1), (2, 2, 6), (1, 3, 3), (3, 3, 10),
                                            (2, 3, 7), (3, 2, 9), (4, 4, 20)])
def test_chvatal_hanson_values(nu, delta, value):
    assert chvatal_hanson(nu, delta) == value


@pytest.mark.parametrize("k", range(1, 9))
def test_gadgets(k):
    spec = ahs_gadget(k)
    assert spec.check() == []
    g = spec.realized
    assert g.edge_count == chvatal_hanson(k - 1, k - 1) == ahs_value(k)
    assert max_degree(g) <= k - 1 and matching_number(g) <= k - 1


def test_gadget_family_counts():
    assert len(gadget_family(2)) == 1
    assert len(gadget_family(3)) == 1
    assert len(gadget_family(4)) == 4
    for g in gadget_family(4):
        assert g.n == 7 and g.edge_count == 10 and max_degree(g) <= 3 and matching_number(g) <= 3


def test_extremal_member():
    g, p = extremal_member(12, 3, 2)
    assert g.edge_count == 42
    with pytest.raises(ClassTooSmall):
        extremal_member(9, 3, 2)
    assert smallest_valid_n(3, 2) == 11
    assert smallest_valid_n(1, 3) == 3


@pytest.mark.parametrize("k,r", [(2, 2), (3, 3), (4, 2)])
def test_family_members_have_target_edges(k, r):
    n = smallest_valid_n(k, r)
    target = turan_edge_count(n, r) + chvatal_hanson(k - 1, k - 1)
    for g, _ in extremal_family(n, k, r, any_class=True):
        assert g.edge_count == target
