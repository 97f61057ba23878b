"""Checkers for edge-criticality, k-good partitions, excess subgraphs and
r-partite deletion distance."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

import numpy as np

from .constructions import chvatal_hanson, suspension
from .errors import BadPartition, BudgetExceeded, NotCriticalEdge
from .graph import Edge, Graph, bits
from .invariants import chromatic_number, matching_number, maximum_matching
from .partition import RPartition

EXACT_PARTITION_LIMIT = 20
EXCESS_LIMIT = 20
KGOOD_NODE_BUDGET = 2_000_000

Condition = Literal["i", "ii", "iii"]


# -- critical edges ---------------------------------------------------------------


def critical_edges(h: Graph) -> list[Edge]:
    """Edges whose deletion lowers the chromatic number by one."""
    if h.edge_count == 0:
        return []
    chi = chromatic_number(h)
    return [(u, v) for u, v in h.edges() if chromatic_number(h.remove_edge(u, v)) == chi - 1]


def is_edge_critical(h: Graph) -> bool:
    if h.edge_count == 0:
        return False
    chi = chromatic_number(h)
    return any(chromatic_number(h.remove_edge(u, v)) == chi - 1 for u, v in h.edges())


def check_suspension_lift(g: Graph, e: Edge) -> bool:
    """For a critical edge v1v2 of ``g``, test that both centre edges uv1, uv2
    of ``g + u`` are critical.  The centre u is vertex 0 of the suspension."""
    v1, v2 = e
    if not g.has_edge(v1, v2):
        raise NotCriticalEdge(f"{v1}-{v2} is not an edge")
    chi = chromatic_number(g)
    if chromatic_number(g.remove_edge(v1, v2)) != chi - 1:
        raise NotCriticalEdge(f"{v1}-{v2} is not a critical edge")
    star = suspension([g])
    chi_star = chromatic_number(star)
    return all(chromatic_number(star.remove_edge(0, v + 1)) == chi_star - 1 for v in (v1, v2))


# -- k-good partitions ----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: Condition
    class_index: int
    vertex: int | None = None
    matching: tuple[Edge, ...] = ()
    value: int = 0  # the left-hand side that exceeded k - 1

    def to_dict(self) -> dict:
        return {"condition": self.condition, "class": self.class_index, "vertex": self.vertex,
                "matching": [list(e) for e in self.matching], "value": self.value}


@dataclass(frozen=True)
class KGoodReport:
    ok: bool
    violated: Violation | None = None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violated": None if self.violated is None else self.violated.to_dict()}


def check_k_good(g: Graph, p: RPartition, k: int) -> KGoodReport:
    """Evaluate the three k-good conditions; report the first violation found
    scanning condition, then class, then vertex."""
    if p.n != g.n:
        raise BadPartition(f"partition is over {p.n} vertices, graph has {g.n}")
    p.validate()
    limit = k - 1
    classes = p.classes

    for i, cls in enumerate(classes):
        if cls == 0:
            return KGoodReport(False, Violation("i", i))
        for v in bits(cls):
            d = g.degree_in(v, cls)
            if d > limit:
                return KGoodReport(False, Violation("i", i, vertex=v, value=d))

    nus = [matching_number(g, cls) for cls in classes]
    total = sum(nus)
    for i in range(len(classes)):
        if total - nus[i] > limit:
            witness: list[Edge] = []
            for j, cls in enumerate(classes):
                if j != i:
                    witness.extend(maximum_matching(g, cls))
            return KGoodReport(False, Violation("ii", i, matching=tuple(witness), value=total - nus[i]))

    for i, cls in enumerate(classes):
        for u in bits(cls):
            lhs = g.degree_in(u, cls)
            for j, other in enumerate(classes):
                if j != i and lhs <= limit:
                    lhs += matching_number(g, g.adj[u] & other)
            if lhs > limit:
                return KGoodReport(False, Violation("iii", i, vertex=u, value=lhs))
    return KGoodReport(True)


def _find_k_good_exact(g: Graph, k: int, r: int, node_budget: int) -> RPartition | None:
    n = g.n
    if n < r:
        return None
    limit = k - 1
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    classes = [0] * r
    nus = [0] * r
    nodes = 0

    def vertex_ok(u: int, i: int) -> bool:
        lhs = g.degree_in(u, classes[i])
        if lhs > limit:
            return False
        for j in range(r):
            if j != i:
                lhs += matching_number(g, g.adj[u] & classes[j])
                if lhs > limit:
                    return False
        return True

    def place_ok(v: int, c: int, used: int) -> bool:
        cls = classes[c]
        if g.degree_in(v, cls) > limit:
            return False
        for u in bits(g.adj[v] & cls):
            if g.degree_in(u, cls) > limit:
                return False
        total = sum(nus)
        floor = min(nus[:used]) if used == r else 0
        if total - floor > limit:
            return False
        if not vertex_ok(v, c):
            return False
        for u in bits(g.adj[v]):
            for i in range(r):
                if classes[i] >> u & 1:
                    if not vertex_ok(u, i):
                        return False
                    break
        return True

    def search(idx: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"find_k_good exceeded {node_budget} search nodes")
        if idx == n:
            return used == r
        if n - idx < r - used:
            return False
        v = order[idx]
        for c in range(min(used + 1, r)):
            old_nu = nus[c]
            classes[c] |= 1 << v
            nus[c] = matching_number(g, classes[c])
            if place_ok(v, c, max(used, c + 1)) and search(idx + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            nus[c] = old_nu
        return False

    if search(0, 0):
        return RPartition(n, tuple(classes))
    return None


def local_max_cut(g: Graph, r: int, labels: list[int] | None = None) -> list[int]:
    """Single-vertex-move local search for a large r-cut (deterministic)."""
    n = g.n
    if labels is None:
        labels = [v % r for v in range(n)]
    labels = list(labels)
    improved = True
    while improved:
        improved = False
        for v in range(n):
            counts = [0] * r
            for u in bits(g.adj[v]):
                counts[labels[u]] += 1
            best = min(range(r), key=lambda c: (counts[c], c != labels[v], c))
            if counts[best] < counts[labels[v]]:
                labels[v] = best
                improved = True
    return labels


def _find_k_good_heuristic(g: Graph, k: int, r: int, rounds: int = 200,
                           restarts: int = 16) -> RPartition | None:
    """Local max-cut followed by repair moves, restarted from seeded random
    labellings.  Deterministic for a given graph."""
    rng = np.random.Generator(np.random.Philox(g.n))
    for attempt in range(restarts):
        start = None if attempt == 0 else [int(x) for x in rng.integers(0, r, g.n)]
        found = _repair(g, k, r, local_max_cut(g, r, start), rounds)
        if found is not None:
            return found
    return None


def _repair(g: Graph, k: int, r: int, labels: list[int], rounds: int) -> RPartition | None:
    for _ in range(rounds):
        p = RPartition.from_labels(labels, r)
        report = check_k_good(g, p, k)
        if report.ok:
            return p
        viol = report.violated
        v = viol.vertex
        if v is None:
            if viol.condition == "i":
                # empty class: move a vertex from the largest class into it
                biggest = max(range(r), key=lambda c: p.classes[c].bit_count())
                v = next(bits(p.classes[biggest]))
                labels[v] = viol.class_index
                continue
            if not viol.matching:
                return None
            v = viol.matching[0][0]
        counts = [0] * r
        for u in bits(g.adj[v]):
            counts[labels[u]] += 1
        options = [c for c in range(r) if c != labels[v]]
        labels[v] = min(options, key=lambda c: (counts[c], c))
    return None


def find_k_good(g: Graph, k: int, r: int, mode: Literal["auto", "exact", "heuristic"] = "auto",
                exact_limit: int = EXACT_PARTITION_LIMIT,
                node_budget: int = KGOOD_NODE_BUDGET) -> RPartition | None:
    """A k-good r-partition of ``g`` or ``None``.

    Exact mode decides existence; heuristic mode (used above ``exact_limit``
    vertices in auto mode) may miss one, but anything it returns has passed
    :func:`check_k_good`.
    """
    if mode == "exact" or (mode == "auto" and g.n <= exact_limit):
        if g.n > exact_limit and mode == "exact":
            raise BudgetExceeded(f"exact find_k_good limited to n <= {exact_limit}")
        found = _find_k_good_exact(g, k, r, node_budget)
    else:
        found = _find_k_good_heuristic(g, k, r)
    if found is not None:
        assert check_k_good(g, found, k).ok
    return found


# -- r-partite deletion distance ---------------------------------------------------------


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    exact: bool
    partition: RPartition

    def to_dict(self) -> dict:
        return {"distance": self.distance, "exact": self.exact, "partition": self.partition.as_lists()}


def _false_twin_groups(g: Graph) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return sorted(groups.values())


def intra_class_edges(g: Graph, labels: list[int]) -> int:
    return sum(1 for u, v in g.edges() if labels[u] == labels[v])


def r_partite_distance(g: Graph, r: int, exact_limit: int = EXACT_PARTITION_LIMIT) -> DistanceResult:
    """Fewest edges whose deletion leaves an r-partite graph.

    Vertices with identical neighbourhoods are pairwise non-adjacent and pay
    independent costs, so some optimum puts each such group in one class;
    the exact branch and bound runs on that weighted quotient and is used
    whenever the quotient has at most ``exact_limit`` nodes.
    """
    if r < 1:
        raise ValueError("r must be positive")
    heur = local_max_cut(g, r)
    heur_cost = intra_class_edges(g, heur)
    groups = _false_twin_groups(g)
    m = len(groups)
    if m > exact_limit:
        return DistanceResult(heur_cost, False, RPartition.from_labels(heur, r))

    group_of = [0] * g.n
    for i, grp in enumerate(groups):
        for v in grp:
            group_of[v] = i
    weight = [len(grp) for grp in groups]
    w = [[0] * m for _ in range(m)]
    for i, grp in enumerate(groups):
        for u in bits(g.adj[grp[0]]):
            w[i][group_of[u]] = weight[i] * weight[group_of[u]]
    order = sorted(range(m), key=lambda i: (-sum(w[i]), i))

    best = heur_cost
    best_assign: list[int] | None = None
    assign = [-1] * m
    load = [[0] * r for _ in range(m)]  # load[i][c]: cost of putting group i in class c

    def search(idx: int, cost: int, used: int) -> None:
        nonlocal best, best_assign
        if cost >= best:
            return
        if idx == m:
            best, best_assign = cost, list(assign)
            return
        if cost + sum(min(load[order[j]]) for j in range(idx + 1, m)) >= best:
            return
        i = order[idx]
        for c in sorted(range(min(used + 1, r)), key=lambda c: (load[i][c], c)):
            assign[i] = c
            for j in range(m):
                if w[i][j]:
                    load[j][c] += w[i][j]
            search(idx + 1, cost + load[i][c], max(used, c + 1))
            for j in range(m):
                if w[i][j]:
                    load[j][c] -= w[i][j]
        assign[i] = -1

    search(0, 0, 0)
    if best_assign is None:
        return DistanceResult(heur_cost, True, RPartition.from_labels(heur, r))
    labels = [best_assign[group_of[v]] for v in range(g.n)]
    return DistanceResult(best, True, RPartition.from_labels(labels, r))


# -- excess subgraphs ----------------------------------------------------------------


@dataclass
class ExcessResult:
    subgraph_vertices: tuple[int, ...]
    excess: int
    minimal: bool
    k: int | None = None
    bound_i: bool | None = None  # excess <= f(k-1, k-1)
    degree_ii: bool | None = None  # per-vertex degree window
    strict_iii: bool | None = None  # strict bound when every class has nu >= 2
    notes: list[str] = field(default_factory=list)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.subgraph_vertices:
            m |= 1 << v
        return m

    def to_dict(self) -> dict:
        def na(x: bool | None) -> bool | str:
            return "not applicable" if x is None else x
        return {"vertices": list(self.subgraph_vertices), "excess": self.excess, "minimal": self.minimal,
                "k": self.k, "i": na(self.bound_i), "ii": na(self.degree_ii), "iii": na(self.strict_iii),
                "notes": self.notes}


def _popcount_table(n: int, mask: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return np.bitwise_count(idx & mask).astype(np.int64)


def excess_table(g: Graph, p: RPartition) -> np.ndarray:
    """excess[S] = e(G[S]) - (cross-class pairs inside S) for every subset S."""
    n = g.n
    e = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        lo = np.arange(1 << b, dtype=np.int64)
        low_adj = g.adj[b] & ((1 << b) - 1)
        e[(1 << b):(1 << (b + 1))] = e[:1 << b] + np.bitwise_count(lo & low_adj)
    size = _popcount_table(n, (1 << n) - 1)
    sq = np.zeros(1 << n, dtype=np.int64)
    for cls in p.classes:
        s = _popcount_table(n, cls)
        sq += s * s
    return e - (size * size - sq) // 2


def excess_of(g: Graph, p: RPartition, mask: int) -> int:
    sizes = [(c & mask).bit_count() for c in p.classes]
    cross = sum(a * b for a, b in combinations(sizes, 2))
    return g.edges_in(mask) - cross


def excess_subgraph(g: Graph, p: RPartition, k: int | None = None,
                    limit: int = EXCESS_LIMIT) -> ExcessResult:
    """Inclusion-minimal induced subgraph of maximum excess (ties: least sorted
    vertex list), together with the three structural checks that apply when
    ``p`` is k-good."""
    p.validate()
    if g.n > limit:
        raise BudgetExceeded(f"excess_subgraph is exhaustive; n={g.n} exceeds {limit}")
    table = excess_table(g, p)
    top = int(table.max())
    hits = np.flatnonzero(table == top)
    sizes = np.bitwise_count(hits)
    hits = hits[np.lexsort((hits, sizes))]
    minimal_sets: list[int] = []
    for s in hits.tolist():
        if not any(m & ~s == 0 for m in minimal_sets):
            minimal_sets.append(s)
    chosen = min(minimal_sets, key=lambda s: list(bits(s)))
    res = ExcessResult(tuple(bits(chosen)), top, True, k)
    assert excess_of(g, p, chosen) == top

    if k is None:
        res.notes.append("no k given; structural checks not applicable")
        return res
    if not check_k_good(g, p, k).ok:
        res.notes.append(f"partition is not {k}-good; structural checks not applicable")
        return res

    f = chvatal_hanson(k - 1, k - 1)
    res.bound_i = top <= f
    parts = p.restrict(chosen)
    nus = [matching_number(g, c) for c in parts]
    ok_ii = True
    for i, cls in enumerate(parts):
        outside = (chosen & ~cls).bit_count()
        cap = k - 1 - (sum(nus) - nus[i])
        for x in bits(cls):
            slack = g.degree_in(x, chosen) - outside
            if not 0 < slack <= cap:
                ok_ii = False
                res.notes.append(f"(ii) fails at vertex {x}: {slack} not in (0, {cap}]")
    res.degree_ii = ok_ii
    if all(nu >= 2 for nu in nus):
        res.strict_iii = top < f
    else:
        res.strict_iii = True
        res.notes.append("(iii) premise false (some class has nu < 2); holds vacuously")
    return res
