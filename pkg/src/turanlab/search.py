"""Exact small-n Turán numbers by canonical augmentation.

The search walks the canonical edge-augmentation tree restricted to H-free
graphs.  H-freeness is closed under deleting edges, so every H-free graph is
reached, and a node whose edge count plus number of individually addable
non-edges falls short of the incumbent cannot lead to an extremal graph.
"""
from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Sequence

from . import checkpoint as ckpt
from .augment import EdgeAugmenter
from .canon import CanonicalForm, canonical_form, canonical_label
from .certificates import critical_edges
from .constructions import (chvatal_hanson, extremal_family, suspension, turan_edge_count,
                            turan_graph)
from .errors import (BudgetExceeded, CheckpointError, ClassTooSmall, NotEdgeCritical,
                     PatternEmpty, WrongChromatic)
from .graph import Graph, from_graph6, to_graph6
from .invariants import chromatic_number
from .subgraph import arc_orbit_representatives, contains_subgraph, contains_subgraph_through_edge

log = logging.getLogger(__name__)

ENUMERATION_LIMIT = 10


# -- enumeration ---------------------------------------------------------------------


def enumerate_graphs(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[Graph]:
    """Stream one graph per isomorphism class on ``n`` vertices."""
    if n > limit:
        raise BudgetExceeded(f"enumerate_graphs limited to n <= {limit}")
    yield from EdgeAugmenter(n).walk()


def naive_class_count(n: int) -> int:
    """Isomorphism classes on ``n`` vertices by labelled enumeration: walk all
    labelled graphs and, at each unseen one, mark its whole relabelling orbit."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    pair_maps = [[index[tuple(sorted((pi[a], pi[b])))] for a, b in pairs] for pi in perms]
    seen = bytearray(1 << len(pairs))
    count = 0
    for m in range(1 << len(pairs)):
        if seen[m]:
            continue
        count += 1
        set_bits = [i for i in range(len(pairs)) if m >> i & 1]
        for pm in pair_maps:
            img = 0
            for i in set_bits:
                img |= 1 << pm[i]
            seen[img] = 1
    return count


def burnside_class_count(n: int) -> int:
    """Isomorphism classes on ``n`` vertices by averaging 2^(pair cycles) over S_n."""
    pairs = list(combinations(range(n), 2))
    total = 0
    for pi in permutations(range(n)):
        seen = set()
        cycles = 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                q = tuple(sorted((pi[q[0]], pi[q[1]])))
        total += 2 ** cycles
    return total // math.factorial(n)


# -- exact Turán numbers ---------------------------------------------------------------


@dataclass
class SearchStats:
    nodes: int = 0
    iso_rejections: int = 0
    pruned: int = 0
    wall_time: float = 0.0


@dataclass
class SearchReport:
    n: int
    pattern_code: bytes
    ex_value: int
    extremal_codes: list[bytes]
    stats: SearchStats = field(default_factory=SearchStats)
    verified: bool | None = None

    def extremal_graphs(self) -> list[Graph]:
        return [from_graph6(c) for c in self.extremal_codes]

    def to_dict(self, deterministic: bool = False) -> dict:
        stats = {"nodes": self.stats.nodes, "iso_rejections": self.stats.iso_rejections,
                 "pruned": self.stats.pruned}
        if not deterministic:
            stats["wall_time"] = round(self.stats.wall_time, 6)
        return {"n": self.n, "pattern": self.pattern_code.decode(), "ex": self.ex_value,
                "extremal_count": len(self.extremal_codes),
                "extremal": [c.decode() for c in self.extremal_codes],
                "verified": self.verified, "stats": stats}


def default_turan_limit(h: Graph) -> int:
    return 10 if h.n <= 3 else 9


def _greedy_lower_bound(n: int, h: Graph) -> int:
    g = Graph.empty(n)
    for u, v in combinations(range(n), 2):
        trial = g.add_edge(u, v)
        if not contains_subgraph_through_edge(trial, h, u, v):
            g = trial
    return g.edge_count


class _TuranSearch:
    def __init__(self, n: int, h: Graph, incumbent: int = -1):
        self.n = n
        self.h = h
        self.arcs = arc_orbit_representatives(h)
        self.aug = EdgeAugmenter(n)
        self.incumbent = incumbent
        self.extremal: set[bytes] = set()
        self.nodes = 0
        self.pruned = 0

    def free_with(self, g: Graph, u: int, v: int) -> bool:
        return not contains_subgraph_through_edge(g.add_edge(u, v), self.h, u, v, self.arcs)

    def visit(self, g: Graph, code: bytes) -> list[tuple[Graph, bytes]]:
        self.nodes += 1
        e = g.edge_count
        if e > self.incumbent:
            self.incumbent = e
            self.extremal = {code}
        elif e == self.incumbent:
            self.extremal.add(code)
        addable = [(u, v) for u, v in self.aug.candidates(g) if self.free_with(g, u, v)]
        if e + len(addable) < self.incumbent or not addable:
            if addable:
                self.pruned += 1
            return []
        return self.aug.children(g, code, addable)

    def run(self, stack: list[tuple[Graph, bytes]], max_nodes: int | None = None,
            on_tick=None, tick_every: int = 0) -> bool:
        """Depth-first until the stack is empty (True) or ``max_nodes`` is hit (False)."""
        done = 0
        while stack:
            if max_nodes is not None and done >= max_nodes:
                return False
            g, code = stack.pop()
            stack.extend(reversed(self.visit(g, code)))
            done += 1
            if on_tick is not None and tick_every and done % tick_every == 0:
                on_tick(stack)
        return True

    def checkpoint(self, stack: list[tuple[Graph, bytes]], pattern_code: bytes) -> ckpt.Checkpoint:
        return ckpt.Checkpoint(self.n, pattern_code, self.incumbent, self.nodes,
                               self.aug.stats.iso_rejections, self.pruned,
                               sorted(self.extremal), [g for g, _ in stack])


def _subtree_worker(args: tuple[int, str, str, int]) -> tuple[int, list[bytes], int, int, int]:
    n, h6, g6, incumbent = args
    search = _TuranSearch(n, from_graph6(h6), incumbent)
    g = from_graph6(g6)
    search.run([(g, canonical_label(g))])
    return (search.incumbent, sorted(search.extremal), search.nodes,
            search.aug.stats.iso_rejections, search.pruned)


def verify_extremal(n: int, h: Graph, codes: Sequence[bytes], value: int) -> bool:
    """Every listed graph has ``value`` edges, is H-free and is edge-maximal."""
    for code in codes:
        g = from_graph6(code)
        if g.n != n or g.edge_count != value or contains_subgraph(g, h):
            return False
        if any(not contains_subgraph_through_edge(g.add_edge(u, v), h, u, v) for u, v in g.non_edges()):
            return False
    return len(set(codes)) == len(codes)


def exact_turan(n: int, h: Graph, *, limit: int | None = None, workers: int = 1,
                split_depth: int = 3, checkpoint_path: str | None = None,
                resume: str | None = None, max_nodes: int | None = None,
                checkpoint_every: int = 2000) -> SearchReport:
    """ex(n, H) with every extremal graph up to isomorphism.

    With ``checkpoint_path`` the frontier is written periodically and when
    ``max_nodes`` stops the run early (raising :class:`BudgetExceeded`);
    ``resume`` continues from such a file.  ``workers > 1`` fans the subtrees
    below ``split_depth`` out to processes and merges them deterministically.
    """
    if h.edge_count == 0:
        raise PatternEmpty("ex(n, H) is undefined for an edgeless pattern")
    limit = default_turan_limit(h) if limit is None else limit
    if n > limit:
        raise BudgetExceeded(f"exact_turan limited to n <= {limit} for this pattern")
    start = time.perf_counter()
    pattern_code = canonical_label(h)

    if resume is not None:
        cp = ckpt.load(resume)
        if cp.n != n or cp.pattern_code != pattern_code:
            raise CheckpointError("checkpoint was written for a different (n, H)")
        search = _TuranSearch(n, h, cp.incumbent)
        search.extremal = set(cp.extremal)
        search.nodes, search.pruned = cp.nodes, cp.pruned
        search.aug.stats.iso_rejections = cp.rejected
        stack = [(g, canonical_label(g)) for g in cp.frontier]
    else:
        search = _TuranSearch(n, h, _greedy_lower_bound(n, h))
        root = Graph.empty(n)
        stack = [(root, canonical_label(root))]

    if workers > 1 and checkpoint_path is None and resume is None:
        # breadth-first down to split_depth, then one task per subtree
        frontier = stack
        for _ in range(split_depth):
            nxt = []
            for g, code in frontier:
                nxt.extend(search.visit(g, code))
            frontier = nxt
        tasks = [(n, to_graph6(h), to_graph6(g), search.incumbent) for g, _ in frontier]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree_worker, tasks))
        for inc, codes, nodes, rej, pruned in results:
            search.nodes += nodes
            search.aug.stats.iso_rejections += rej
            search.pruned += pruned
            if inc > search.incumbent:
                search.incumbent, search.extremal = inc, set(codes)
            elif inc == search.incumbent:
                search.extremal |= set(codes)
        complete = True
    else:
        def tick(st):
            if checkpoint_path:
                ckpt.save(search.checkpoint(st, pattern_code), checkpoint_path)

        complete = search.run(stack, max_nodes, tick, checkpoint_every)
        if not complete:
            if checkpoint_path:
                ckpt.save(search.checkpoint(stack, pattern_code), checkpoint_path)
            raise BudgetExceeded(f"stopped after {max_nodes} nodes"
                                 + (f"; checkpoint written to {checkpoint_path}" if checkpoint_path else ""))
        if checkpoint_path:
            ckpt.save(search.checkpoint([], pattern_code), checkpoint_path)

    codes = sorted(search.extremal)
    stats = SearchStats(search.nodes, search.aug.stats.iso_rejections, search.pruned,
                        time.perf_counter() - start)
    report = SearchReport(n, pattern_code, search.incumbent, codes, stats)
    report.verified = verify_extremal(n, h, codes, search.incumbent)
    return report


# -- construction grid -----------------------------------------------------------------


@dataclass
class GridVerdict:
    n: int
    k: int
    r: int
    pattern: str
    target: int  # t_r(n) + f(k-1, k-1)
    family_size: int
    lower_bound_ok: bool
    exact_value: int | None = None
    exact_match: bool | None = None  # None: not tested
    uniqueness_ok: bool | None = None
    extremal_count: int | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def validate_components(components: Sequence[Graph], r: int) -> None:
    for i, comp in enumerate(components):
        if chromatic_number(comp) != r:
            raise WrongChromatic(f"component {i} has chromatic number {chromatic_number(comp)}, expected {r}")
        if not critical_edges(comp):
            raise NotEdgeCritical(f"component {i} has no critical edge")


def verify_theorem_grid(k: int, r: int, components: Sequence[Graph], n_values: Sequence[int],
                        exact_limit: int | None = None, describe: str | None = None,
                        workers: int = 1) -> list[GridVerdict]:
    """Check the extremal construction for H = {components} + v at each n.

    The lower bound (every family member is H-free with t_r(n) + f(k-1,k-1)
    edges) is always checked.  Where ``n <= exact_limit`` the exact search
    runs and its value and extremal set are reported next to the formula;
    disagreement there is data, not failure, since the construction is only claimed optimal for large n.
    Values of n whose classes cannot hold the gadget are skipped.
    """
    if len(components) != k:
        raise ValueError(f"expected {k} components, got {len(components)}")
    validate_components(components, r)
    h = suspension(components)
    exact_limit = default_turan_limit(h) if exact_limit is None else exact_limit
    f = chvatal_hanson(k - 1, k - 1)
    name = describe or "+".join(to_graph6(c) for c in components) + "+v"
    out = []
    for n in n_values:
        try:
            family = extremal_family(n, k, r)
        except ClassTooSmall:
            continue
        target = turan_edge_count(n, r) + f
        lower_ok = all(g.edge_count == target and not contains_subgraph(g, h) for g, _ in family)
        verdict = GridVerdict(n, k, r, name, target, len(family), lower_ok)
        if n <= exact_limit:
            report = exact_turan(n, h, limit=exact_limit, workers=workers)
            wide = {canonical_label(g) for g, _ in extremal_family(n, k, r, any_class=True)}
            verdict.exact_value = report.ex_value
            verdict.exact_match = lower_ok and report.ex_value == target
            verdict.uniqueness_ok = set(report.extremal_codes) == wide
            verdict.extremal_count = len(report.extremal_codes)
        out.append(verdict)
    return out


# -- multipartite scan ------------------------------------------------------------------


@dataclass
class ScanResult:
    n: int
    t: int
    r: int
    max_edges: int
    host_edges: int
    bound: float  # t_r(rn) - n^2/2
    bound_holds: bool
    nodes: int = 0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def multipartite_free_scan(n: int, t: int, r: int, limit: int = 12,
                           max_nodes: int | None = None) -> ScanResult:
    """Most edges in a spanning subgraph of T_r(rn) with no copy of T_r(rt).

    Graphs are generated up to isomorphisms that preserve the class partition
    or permute whole classes.  A small-n failure of the asymptotic bound is
    recorded in ``bound_holds``.
    """
    N = r * n
    if N > limit:
        raise BudgetExceeded(f"multipartite_free_scan limited to rn <= {limit}")
    host, part = turan_graph(N, r)
    pattern, _ = turan_graph(r * t, r)
    labels = part.labels()
    cross = host.edges()
    class_perms = list(permutations(range(r)))

    def canon(g: Graph) -> CanonicalForm:
        forms = [canonical_form(g, [pi[c] for c in labels]) for pi in class_perms]
        return max(forms, key=lambda f: f.code)

    aug = EdgeAugmenter(N, canon=canon, pairs=cross)
    arcs = arc_orbit_representatives(pattern)
    best = 0
    nodes = 0
    root = Graph.empty(N)
    stack = [(root, canon(root).code)]
    while stack:
        g, code = stack.pop()
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded(f"multipartite_free_scan stopped after {max_nodes} nodes")
        best = max(best, g.edge_count)
        addable = [(u, v) for u, v in aug.candidates(g)
                   if not contains_subgraph_through_edge(g.add_edge(u, v), pattern, u, v, arcs)]
        if g.edge_count + len(addable) <= best:
            continue
        stack.extend(reversed(aug.children(g, code, addable)))
    bound = turan_edge_count(N, r) - n * n / 2
    return ScanResult(n, t, r, best, turan_edge_count(N, r), bound, best <= bound, nodes)
