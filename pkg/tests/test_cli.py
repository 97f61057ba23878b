import io
import json

import pytest

from turanlab.cli import parse_graph_arg, run_command
from turanlab.config import Budgets, RunConfig
from turanlab.constructions import fan
from turanlab.graph import Graph, from_graph6


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_construct_turan():
    code, out, _ = run("construct", "turan", "--n", "5", "--r", "2")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1 and doc["edges"] == 6
    assert from_graph6(doc["graph6"]) == Graph.complete_multipartite([3, 2])


def test_oracle_report():
    code, out, _ = run("oracle", "fnu", "--nu", "2", "--delta", "2")
    doc = json.loads(out)
    assert code == 0 and (doc["formula"], doc["oracle"], doc["match"]) == (6, 6, True)


def test_turan_from_file(tmp_path):
    f = tmp_path / "triangle.g6"
    f.write_text("Bw\n")
    code, out, _ = run("turan", "exact", "--n", "5", "--pattern", str(f), "--deterministic")
    doc = json.loads(out)
    assert code == 0 and doc["ex"] == 6 and doc["extremal_count"] == 1


def test_deterministic_output_is_byte_identical():
    argv = ("sweep", "lift", "--count", "30", "--seed", "7", "--deterministic")
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    assert json.loads(first[1])["seed"] == 7


def test_exit_codes():
    assert run("nonsense")[0] == 2
    code, _, err = run("turan", "exact", "--n", "12", "--pattern", "k3")
    assert code == 3 and json.loads(err)["error"] == "BudgetExceeded"
    code, _, err = run("invariants", "not-a-graph!!")
    assert code == 2 and "error" in json.loads(err)
    code, out, _ = run("kgood", "check", "K4", "--k", "1", "--partition", "0,0,1,1")
    assert code == 1 and json.loads(out)["violated"]["condition"] == "i"


def test_grid_csv():
    code, out, _ = run("verify", "grid", "--k", "1", "--r", "2", "--components", "K2+v",
                       "--n-min", "3", "--n-max", "5", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("n,k,r") and len(lines) == 4


def test_budget_override():
    code, _, _ = run("scan", "lemma32", "--n", "2", "--t", "1", "--budget", "scan_vertices=3")
    assert code == 3
    assert run("scan", "lemma32", "--n", "1", "--t", "1", "--budget", "bogus=3")[0] == 2


@pytest.mark.parametrize("cmd", [["invariants", "c5"], ["critical-edges", "w5"], ["distance", "k4", "--r", "2"],
                                 ["kgood", "find", "bowtie", "--k", "2"], ["construct", "gadget", "--k", "4"],
                                 ["construct", "extremal", "--n", "12", "--k", "3", "--r", "2"],
                                 ["excess", "k4", "--partition", "0 1|2 3", "--k", "2"]])
def test_commands_emit_roundtrippable_graph6(cmd):
    code, out, _ = run(*cmd, "--format", "json")
    assert code in (0, 1)
    doc = json.loads(out)
    if "graph6" in doc:
        g = from_graph6(doc["graph6"])
        assert g.edge_count == doc["edges"]


def test_pattern_names():
    assert parse_graph_arg("k_3") == Graph.complete(3)
    assert parse_graph_arg("fan:2,3") == fan(2, 3)
    assert parse_graph_arg("K2+K2+v") == fan(2, 3)
    assert parse_graph_arg("c5").edge_count == 5
    assert parse_graph_arg("K3+C5+v").n == 9


def test_config_env(monkeypatch):
    cfg = RunConfig.from_env({"TURANLAB_BUDGET_TURAN_N": "8", "TURANLAB_SEED": "4"})
    assert cfg.budgets.turan_n == 8 and cfg.seed == 4
    with pytest.raises(ValueError):
        RunConfig.from_env({"TURANLAB_BUDGET_EXCESS_N": "0"})
    with pytest.raises(ValueError):
        Budgets().override({"nope": "1"})
