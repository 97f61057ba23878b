import pytest

from turanlab import checkpoint as ckpt
from turanlab.canon import canonical_label
from turanlab.constructions import fan, turan_edge_count, turan_graph
from turanlab.errors import BudgetExceeded, CheckpointError, NotEdgeCritical, PatternEmpty, WrongChromatic
from turanlab.graph import Graph, from_graph6
from turanlab.search import (burnside_class_count, enumerate_graphs, exact_turan,
                             multipartite_free_scan, naive_class_count, verify_theorem_grid)
from turanlab.subgraph import contains_subgraph

COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("n", range(0, 8))
def test_enumeration_counts(n):
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == COUNTS[n] == burnside_class_count(n)
    assert len({canonical_label(g) for g in graphs}) == len(graphs)


@pytest.mark.parametrize("n", range(1, 6))
def test_naive_oracle(n):
    assert naive_class_count(n) == COUNTS[n]


def test_turan_examples():
    rep = exact_turan(5, Graph.complete(3))
    assert rep.ex_value == 6 and rep.extremal_codes == [canonical_label(turan_graph(5, 2)[0])]
    rep = exact_turan(4, Graph.complete(3))
    assert rep.ex_value == 4 and rep.extremal_codes == [canonical_label(Graph.cycle(4))]
    assert exact_turan(6, fan(2, 3)).ex_value == 10


def test_turan_errors():
    with pytest.raises(PatternEmpty):
        exact_turan(5, Graph.empty(3))
    with pytest.raises(BudgetExceeded):
        exact_turan(11, Graph.complete(3))


@pytest.mark.parametrize("h", [Graph.cycle(4), Graph.path(4), Graph.cycle(5)])
def test_extremal_graphs_are_free_and_maximal(h):
    prev = 0
    for n in range(h.n, 8):
        rep = exact_turan(n, h)
        assert rep.ex_value >= prev and rep.verified
        prev = rep.ex_value
        for g in rep.extremal_graphs():
            assert g.edge_count == rep.ex_value and not contains_subgraph(g, h)
            assert all(contains_subgraph(g.add_edge(u, v), h) for u, v in g.non_edges())


def test_workers_give_same_report():
    h = Graph.cycle(4)
    one = exact_turan(8, h, workers=1)
    two = exact_turan(8, h, workers=2, split_depth=2)
    assert one.to_dict(deterministic=True)["extremal"] == two.to_dict(deterministic=True)["extremal"]
    assert one.ex_value == two.ex_value == 11


def test_checkpoint_resume(tmp_path):
    h = Graph.complete(4)
    path = tmp_path / "run.ck"
    full = exact_turan(7, h)
    with pytest.raises(BudgetExceeded):
        exact_turan(7, h, checkpoint_path=str(path), max_nodes=50)
    cp = ckpt.load(path)
    assert cp.n == 7 and cp.nodes >= 50 and cp.frontier
    resumed = exact_turan(7, h, resume=str(path))
    assert resumed.ex_value == full.ex_value == turan_edge_count(7, 3)
    assert resumed.extremal_codes == full.extremal_codes
    with pytest.raises(CheckpointError):
        exact_turan(6, h, resume=str(path))


def test_checkpoint_format_roundtrip():
    cp = ckpt.Checkpoint(5, b"Bw", 4, 10, 3, 2, [b"DFw"], [Graph.cycle(5), Graph.empty(5)])
    back = ckpt.loads(ckpt.dumps(cp))
    assert back == cp
    data = ckpt.dumps(cp)
    with pytest.raises(CheckpointError):
        ckpt.loads(data[:-1])
    with pytest.raises(CheckpointError):
        ckpt.loads(b"XXXX" + data[4:])


def test_grid_small():
    rows = verify_theorem_grid(1, 2, [Graph.complete(2)], range(3, 8))
    assert all(v.lower_bound_ok and v.exact_match and v.uniqueness_ok for v in rows)
    rows = verify_theorem_grid(2, 2, [Graph.complete(2)] * 2, range(5, 8))
    assert [v.exact_value for v in rows] == [turan_edge_count(n, 2) + 1 for n in range(5, 8)]


def test_grid_rejects_bad_components():
    with pytest.raises(WrongChromatic):
        verify_theorem_grid(1, 3, [Graph.complete(2)], [5])
    with pytest.raises(NotEdgeCritical):
        verify_theorem_grid(1, 2, [Graph.cycle(4)], [5])


@pytest.mark.parametrize("n,t,r,value,holds", [(1, 1, 2, 0, True), (4, 2, 2, 9, False), (5, 2, 2, 12, True)])
def test_scan(n, t, r, value, holds):
    res = multipartite_free_scan(n, t, r)
    assert res.max_edges == value and res.bound_holds == holds
