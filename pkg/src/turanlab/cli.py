"""Command-line front end: ``turanlab <command> ...``.

Every run writes one report to stdout (JSON by default, ``schema: 1``) and
any error as a JSON object on stderr.  Exit codes: 0 ok, 1 a verification
came out false, 2 usage or input error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from pathlib import Path
from typing import Callable, TextIO

from . import __version__
from .certificates import (check_k_good, check_suspension_lift, critical_edges, excess_subgraph,
                           find_k_good, r_partite_distance)
from .config import RunConfig
from .constructions import (ahs_gadget, chvatal_hanson, extremal_family, extremal_member, fan,
                            gadget_family, suspension, turan_edge_count, turan_graph)
from .errors import BudgetExceeded, TuranLabError
from .fnu_oracle import bounded_nu_delta_oracle
from .graph import Graph, parse_graph, to_graph6
from .invariants import chromatic_number, degree_stats, matching_number
from .partition import RPartition
from .sampling import random_graph, rng_for
from .search import exact_turan, multipartite_free_scan, verify_theorem_grid

SCHEMA = 1
EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# -- graph and pattern arguments ---------------------------------------------------------

_NAMED = re.compile(r"^([a-z]+)_?(\d+)$")


def _named_graph(token: str) -> Graph | None:
    t = token.strip().lower()
    aliases = {"triangle": "k3", "edge": "k2", "bowtie": "fan:2,3"}
    t = aliases.get(t, t)
    if t.startswith("fan:"):
        k, r = (int(x) for x in t[4:].split(","))
        return fan(k, r)
    if t.startswith("turan:"):
        n, r = (int(x) for x in t[6:].split(","))
        return turan_graph(n, r)[0]
    m = _NAMED.match(t)
    if not m:
        return None
    kind, size = m.group(1), int(m.group(2))
    if kind == "k":
        return Graph.complete(size)
    if kind == "c":
        return Graph.cycle(size)
    if kind == "p":
        return Graph.path(size)
    if kind == "w":  # wheel: C_size plus a hub
        return Graph.cycle(size).add_vertex((1 << size) - 1)
    if kind == "e":
        return Graph.empty(size)
    return None


def parse_graph_arg(text: str) -> Graph:
    """A graph given as a builtin name, a suspension string, a file, ``-`` or graph6."""
    if text == "-":
        return parse_graph(sys.stdin.read())
    named = _named_graph(text)
    if named is not None:
        return named
    if "+" in text:
        tokens = [tok for tok in text.split("+") if tok.strip()]
        if tokens and tokens[-1].strip().lower() == "v":
            tokens = tokens[:-1]
        return suspension([parse_graph_arg(tok.strip()) for tok in tokens])
    path = Path(text)
    if path.is_file():
        return parse_graph(path.read_text())
    return parse_graph(text)


def parse_components(text: str) -> list[Graph]:
    tokens = [tok.strip() for tok in text.split("+") if tok.strip()]
    if tokens and tokens[-1].lower() == "v":
        tokens = tokens[:-1]
    return [parse_graph_arg(tok) for tok in tokens]


def parse_partition(text: str, n: int) -> RPartition:
    """``0,0,1,1,1`` (class label per vertex) or ``0 1|2 3 4`` (class lists)."""
    if "|" in text:
        classes = [[int(v) for v in re.split(r"[,\s]+", part.strip()) if v] for part in text.split("|")]
        return RPartition.from_lists(n, classes)
    labels = [int(v) for v in re.split(r"[,\s]+", text.strip()) if v]
    if len(labels) != n:
        raise UsageError(f"partition has {len(labels)} labels for {n} vertices")
    return RPartition.from_labels(labels)


def _graph_doc(g: Graph) -> dict:
    return {"graph6": to_graph6(g), "n": g.n, "edges": g.edge_count}


# -- commands ----------------------------------------------------------------------------
# each returns (report, verification_ok)


def cmd_construct(args, cfg: RunConfig) -> tuple[dict, bool]:
    what = args.what
    if what == "turan":
        g, p = turan_graph(args.n, args.r)
        return {**_graph_doc(g), "partition": p.as_lists()}, True
    if what == "fan":
        return _graph_doc(fan(args.k, args.r)), True
    if what == "suspension":
        return _graph_doc(suspension(parse_components(args.components))), True
    if what == "gadget":
        if args.family:
            fam = gadget_family(args.k, budget=cfg.budgets.family_k)
            return {"k": args.k, "count": len(fam), "rows": [_graph_doc(g) for g in fam]}, True
        spec = ahs_gadget(args.k, budget=cfg.budgets.gadget_k)
        problems = spec.check()
        return {**_graph_doc(spec.realized), "k": args.k, "parity": spec.parity,
                "problems": problems}, not problems
    if what == "extremal":
        if args.family or args.any_class:
            fam = extremal_family(args.n, args.k, args.r, any_class=args.any_class)
            rows = [{**_graph_doc(g), "partition": p.as_lists()} for g, p in fam]
            return {"n": args.n, "k": args.k, "r": args.r, "count": len(rows), "rows": rows}, True
        g, p = extremal_member(args.n, args.k, args.r, class_index=args.class_index)
        return {**_graph_doc(g), "partition": p.as_lists(),
                "target": turan_edge_count(args.n, args.r) + chvatal_hanson(args.k - 1, args.k - 1)}, True
    raise UsageError(f"unknown construction {what!r}")


def cmd_invariants(args, cfg: RunConfig) -> tuple[dict, bool]:
    g = parse_graph_arg(args.graph)
    ds = degree_stats(g)
    return {**_graph_doc(g), "nu": matching_number(g),
            "chi": chromatic_number(g, budget=cfg.budgets.chromatic_n),
            "min_degree": ds.min_degree, "max_degree": ds.max_degree,
            "degree_sequence": list(ds.degree_sequence)}, True


def cmd_critical_edges(args, cfg: RunConfig) -> tuple[dict, bool]:
    g = parse_graph_arg(args.graph)
    crit = critical_edges(g)
    return {**_graph_doc(g), "chi": chromatic_number(g, budget=cfg.budgets.chromatic_n),
            "critical_edges": [list(e) for e in crit], "edge_critical": bool(crit)}, True


def cmd_kgood(args, cfg: RunConfig) -> tuple[dict, bool]:
    g = parse_graph_arg(args.graph)
    if args.action == "check":
        if args.partition is None:
            raise UsageError("kgood check needs --partition")
        p = parse_partition(args.partition, g.n)
        report = check_k_good(g, p, args.k)
        return {"k": args.k, **report.to_dict()}, report.ok
    found = find_k_good(g, args.k, args.r, mode=args.mode, exact_limit=cfg.budgets.partition_n)
    return {"k": args.k, "r": args.r, "found": found is not None,
            "partition": found.as_lists() if found else None}, True


def cmd_distance(args, cfg: RunConfig) -> tuple[dict, bool]:
    g = parse_graph_arg(args.graph)
    res = r_partite_distance(g, args.r, exact_limit=cfg.budgets.partition_n)
    return {"r": args.r, **res.to_dict()}, True


def cmd_excess(args, cfg: RunConfig) -> tuple[dict, bool]:
    g = parse_graph_arg(args.graph)
    p = parse_partition(args.partition, g.n)
    res = excess_subgraph(g, p, args.k, limit=cfg.budgets.excess_n)
    ok = all(x is not False for x in (res.bound_i, res.degree_ii, res.strict_iii))
    return res.to_dict(), ok


def cmd_turan(args, cfg: RunConfig) -> tuple[dict, bool]:
    h = parse_graph_arg(args.pattern)
    report = exact_turan(args.n, h, limit=cfg.budgets.turan_n or None, workers=cfg.workers,
                         split_depth=args.split_depth, checkpoint_path=cfg.checkpoint,
                         resume=cfg.resume, max_nodes=args.max_nodes)
    return report.to_dict(cfg.deterministic), bool(report.verified)


def cmd_verify(args, cfg: RunConfig) -> tuple[dict, bool]:
    comps = parse_components(args.components)
    exact_limit = args.exact_max_n if args.exact_max_n is not None else (cfg.budgets.turan_n or None)
    verdicts = verify_theorem_grid(args.k, args.r, comps, range(args.n_min, args.n_max + 1),
                                   exact_limit=exact_limit, describe=args.components, workers=cfg.workers)
    rows = [v.to_dict() for v in verdicts]
    return {"k": args.k, "r": args.r, "components": args.components, "rows": rows}, \
        all(v.lower_bound_ok for v in verdicts)


def cmd_scan(args, cfg: RunConfig) -> tuple[dict, bool]:
    res = multipartite_free_scan(args.n, args.t, args.r, limit=cfg.budgets.scan_vertices,
                                 max_nodes=args.max_nodes)
    return res.to_dict(), True


def cmd_oracle(args, cfg: RunConfig) -> tuple[dict, bool]:
    formula = chvatal_hanson(args.nu, args.delta)
    res = bounded_nu_delta_oracle(args.nu, args.delta, limit=cfg.budgets.oracle)
    return {"nu": args.nu, "delta": args.delta, "formula": formula, "oracle": res.value,
            "match": formula == res.value, "components_seen": res.components_seen}, formula == res.value


def cmd_sweep(args, cfg: RunConfig) -> tuple[dict, bool]:
    rng = rng_for(cfg.seed)
    checked = lifts = 0
    failures = []
    for _ in range(args.count):
        n = int(rng.integers(2, args.max_n + 1))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.9)))
        crit = critical_edges(g)
        if not crit:
            continue
        checked += 1
        for e in crit:
            lifts += 1
            if not check_suspension_lift(g, e):
                failures.append({"graph6": to_graph6(g), "edge": list(e)})
    return {"graphs_sampled": args.count, "graphs_with_critical_edges": checked,
            "lifts_checked": lifts, "violations": failures}, not failures


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "text"])
    common.add_argument("--workers", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--checkpoint")
    common.add_argument("--resume")
    common.add_argument("--deterministic", action="store_true", default=None)
    common.add_argument("--budget", action="append", default=[], metavar="NAME=N",
                        help="override a budget, e.g. --budget turan_n=10")

    p = _Parser(prog="turanlab", description="Small-scale extremal graph verification.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, **kw) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=fn)
        return sp

    c = add("construct", cmd_construct, help="build a named construction, emit graph6")
    c.add_argument("what", choices=["turan", "fan", "suspension", "gadget", "extremal"])
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int, default=2)
    c.add_argument("--k", type=int)
    c.add_argument("--components", default="K2+v")
    c.add_argument("--family", action="store_true")
    c.add_argument("--any-class", action="store_true")
    c.add_argument("--class-index", type=int, default=0)

    for name, fn in (("invariants", cmd_invariants), ("critical-edges", cmd_critical_edges)):
        add(name, fn).add_argument("graph")

    k = add("kgood", cmd_kgood, help="check or search k-good partitions")
    k.add_argument("action", choices=["check", "find"])
    k.add_argument("graph")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--r", type=int, default=2)
    k.add_argument("--partition")
    k.add_argument("--mode", choices=["auto", "exact", "heuristic"], default="auto")

    d = add("distance", cmd_distance, help="edges to delete to make the graph r-partite")
    d.add_argument("graph")
    d.add_argument("--r", type=int, required=True)

    e = add("excess", cmd_excess, help="maximum-excess induced subgraph for a partition")
    e.add_argument("graph")
    e.add_argument("--partition", required=True)
    e.add_argument("--k", type=int)

    t = add("turan", cmd_turan, help="exact ex(n, H)")
    t.add_argument("action", choices=["exact"])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--pattern", required=True)
    t.add_argument("--max-nodes", type=int)
    t.add_argument("--split-depth", type=int, default=3)

    v = add("verify", cmd_verify, help="check the extremal construction over a range of n")
    v.add_argument("action", choices=["grid"])
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--components", required=True, help='e.g. "K2+K2+v" or "K3+C5"')
    v.add_argument("--n-min", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--exact-max-n", type=int)

    s = add("scan", cmd_scan, help="densest T_r(rt)-free subgraph of T_r(rn)")
    s.add_argument("action", choices=["multipartite", "lemma32"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--max-nodes", type=int)

    o = add("oracle", cmd_oracle, help="max edges with bounded matching number and degree")
    o.add_argument("action", choices=["fnu"])
    o.add_argument("--nu", type=int, required=True)
    o.add_argument("--delta", type=int, required=True)

    w = add("sweep", cmd_sweep, help="seeded random check of critical-edge lifting")
    w.add_argument("action", choices=["lift"])
    w.add_argument("--count", type=int, default=200)
    w.add_argument("--max-n", type=int, default=7)
    return p


def _config(args) -> RunConfig:
    cfg = RunConfig.from_env()
    for item in args.budget:
        name, _, value = item.partition("=")
        if not value:
            raise UsageError(f"--budget expects NAME=N, got {item!r}")
        cfg.budgets.override({name: value})
    for attr in ("output_format", "workers", "seed", "checkpoint", "resume", "deterministic"):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(cfg, attr, value)
    if cfg.workers < 1:
        raise UsageError("--workers must be at least 1")
    return cfg


# -- output ------------------------------------------------------------------------------


def _scalar(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    if value is None:
        return ""
    return str(value)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = doc.get("rows")
    if not isinstance(rows, list):
        rows = [{k: v for k, v in doc.items() if k != "rows"}]
    if fmt == "csv":
        cols: list[str] = []
        for row in rows:
            cols.extend(c for c in row if c not in cols)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: _scalar(row.get(c)) for c in cols})
        return buf.getvalue()
    lines = []
    for key, value in doc.items():
        if key == "rows":
            for row in value:
                lines.append("  " + " ".join(f"{k}={_scalar(v)}" for k, v in row.items()))
        else:
            lines.append(f"{key}: {_scalar(value)}")
    return "\n".join(lines) + "\n"


def _error(stderr: TextIO, code: int, kind: str, message: str) -> int:
    stderr.write(json.dumps({"schema": SCHEMA, "error": kind, "message": message, "exit": code}) + "\n")
    return code


def run_command(argv: list[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        start = time.perf_counter()
        report, ok = args.func(args, cfg)
    except UsageError as exc:
        return _error(stderr, EXIT_USAGE, "usage", str(exc))
    except BudgetExceeded as exc:
        return _error(stderr, EXIT_BUDGET, "BudgetExceeded", str(exc))
    except (TuranLabError, ValueError, OSError) as exc:
        return _error(stderr, EXIT_USAGE, type(exc).__name__, str(exc))
    doc = {"schema": SCHEMA, "command": args.command, "seed": cfg.seed, "ok": ok, **report}
    if not cfg.deterministic:
        doc["elapsed"] = round(time.perf_counter() - start, 6)
    stdout.write(render(doc, cfg.output_format))
    return EXIT_OK if ok else EXIT_FAILED


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
