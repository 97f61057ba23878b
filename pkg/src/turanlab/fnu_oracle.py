"""Brute-force maximum of e(G) subject to nu(G) <= nu and Delta(G) <= delta.

Independent of the closed form: connected graphs obeying both bounds are
generated by adding one vertex at a time (every connected graph has a
non-cut vertex, and both bounds pass to induced subgraphs), and a knapsack
over components combines them, since matching number and edge count add up
over components.  A connected graph with these bounds has every edge meeting
the 2*nu matched vertices, so at most 2*nu*(delta+1) vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_label
from .errors import BudgetExceeded
from .graph import Graph, bits
from .invariants import matching_number

EXHAUSTIVE_LIMIT = 3


@dataclass
class OracleResult:
    value: int
    best_component_edges: dict[int, int] = field(default_factory=dict)  # nu -> max edges
    components_seen: int = 0


def connected_bounded(nu: int, delta: int) -> list[Graph]:
    """All connected graphs with at least one edge, nu(G) <= nu and Delta(G) <= delta."""
    level = [Graph.complete(2)]
    out = list(level)
    max_vertices = 2 * nu * (delta + 1)
    while level and level[0].n < max_vertices:
        seen: set[bytes] = set()
        nxt = []
        for g in level:
            open_slots = [v for v in range(g.n) if g.degree(v) < delta]
            for size in range(1, min(delta, len(open_slots)) + 1):
                for subset in combinations(open_slots, size):
                    mask = 0
                    for v in subset:
                        mask |= 1 << v
                    child = g.add_vertex(mask)
                    code = canonical_label(child)
                    if code in seen:
                        continue
                    seen.add(code)
                    if matching_number(child) <= nu:
                        nxt.append(child)
        out.extend(nxt)
        level = nxt
    return out


def bounded_nu_delta_oracle(nu: int, delta: int, limit: int = EXHAUSTIVE_LIMIT) -> OracleResult:
    if nu < 0 or delta < 0:
        raise ValueError("nu and delta must be non-negative")
    if nu == 0 or delta == 0:
        return OracleResult(0)
    if nu > limit or delta > limit:
        raise BudgetExceeded(f"oracle exhaustion limited to nu, delta <= {limit}")
    comps = connected_bounded(nu, delta)
    best: dict[int, int] = {}
    for c in comps:
        j = matching_number(c)
        best[j] = max(best.get(j, 0), c.edge_count)
    # unbounded knapsack: capacity = matching budget, value = edges
    dp = [0] * (nu + 1)
    for cap in range(1, nu + 1):
        dp[cap] = dp[cap - 1]
        for j, e in best.items():
            if j <= cap:
                dp[cap] = max(dp[cap], dp[cap - j] + e)
    return OracleResult(dp[nu], dict(sorted(best.items())), len(comps))


def bounded_nu_delta_bruteforce(nu: int, delta: int, n: int) -> int:
    """Max edges over all labelled graphs on ``n`` vertices (tiny n only)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    best = 0
    for m in range(1 << len(pairs)):
        rows = [0] * n
        for i in bits(m):
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if g.edge_count > best and max((r.bit_count() for r in rows), default=0) <= delta \
                and matching_number(g) <= nu:
            best = g.edge_count
    return best
