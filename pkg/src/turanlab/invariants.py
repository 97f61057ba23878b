"""Exact invariants: degrees, matching number, chromatic number, clique number."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded
from .graph import Graph, bits

CHROMATIC_BUDGET = 32


@dataclass(frozen=True)
class DegreeSummary:
    min_degree: int
    max_degree: int
    degree_sequence: tuple[int, ...]  # sorted, non-increasing


def degree_stats(g: Graph) -> DegreeSummary:
    degs = sorted((row.bit_count() for row in g.adj), reverse=True)
    if not degs:
        return DegreeSummary(0, 0, ())
    return DegreeSummary(degs[-1], degs[0], tuple(degs))


def max_degree(g: Graph, mask: int | None = None) -> int:
    """Maximum degree of ``g`` or of the subgraph it induces on ``mask``."""
    if mask is None:
        return max((row.bit_count() for row in g.adj), default=0)
    return max(((g.adj[v] & mask).bit_count() for v in bits(mask)), default=0)


# -- matching -----------------------------------------------------------------


def maximum_matching(g: Graph, mask: int | None = None) -> list[tuple[int, int]]:
    """A maximum matching of ``g`` (restricted to ``mask``) by Edmonds' blossom algorithm."""
    if mask is None:
        mask = g.vertex_mask
    adj = [g.adj[v] & mask if mask >> v & 1 else 0 for v in range(g.n)]
    n = g.n
    match = [-1] * n
    # greedy start
    for v in bits(mask):
        if match[v] == -1:
            for u in bits(adj[v]):
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in bits(adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in bits(mask):
        if match[root] != -1 or not adj[root]:
            continue
        end, parent = find_path(root)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt
    return [(v, match[v]) for v in range(n) if match[v] > v]


def matching_number(g: Graph, mask: int | None = None) -> int:
    """Size of a maximum matching of ``g`` (or of ``g[mask]``)."""
    if mask is None:
        if g.edge_count == 0:
            return 0
    elif not any(g.adj[v] & mask for v in bits(mask)):
        return 0
    return len(maximum_matching(g, mask))


def matching_number_bruteforce(g: Graph) -> int:
    """Exponential reference: match the lowest vertex or leave it out."""

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = best(rest)
        for u in bits(g.adj[v] & rest):
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best(g.vertex_mask)


# -- cliques and colouring ----------------------------------------------------


def clique_number(g: Graph) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & g.adj[v])

    expand(0, g.vertex_mask)
    return best


def _dsatur_order_color(g: Graph) -> int:
    """Colours used by the greedy DSATUR heuristic."""
    n = g.n
    color = [-1] * n
    used = 0
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            sat = len({color[u] for u in bits(g.adj[v]) if color[u] != -1})
            key = (sat, g.degree(v), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        taken = {color[u] for u in bits(g.adj[best_v])}
        c = 0
        while c in taken:
            c += 1
        color[best_v] = c
        used = max(used, c + 1)
    return used


def chromatic_number(g: Graph, budget: int = CHROMATIC_BUDGET) -> int:
    """Exact chromatic number by DSATUR branch and bound with a clique lower bound."""
    if g.n > budget:
        raise BudgetExceeded(f"chromatic_number: n={g.n} exceeds budget {budget}")
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    lower = clique_number(g)
    best = _dsatur_order_color(g)
    if best == lower:
        return best

    n = g.n
    color = [-1] * n
    # neighbour colour masks per vertex, maintained incrementally
    seen = [0] * n

    def pick() -> int:
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            key = (seen[v].bit_count(), g.degree(v), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def search(colored: int, used: int) -> bool:
        nonlocal best
        if colored == n:
            best = used
            return best == lower
        v = pick()
        options = [c for c in range(used) if not seen[v] >> c & 1]
        if used + 1 < best:
            options.append(used)
        for c in options:
            color[v] = c
            touched = [u for u in bits(g.adj[v]) if color[u] == -1 and not seen[u] >> c & 1]
            for u in touched:
                seen[u] |= 1 << c
            done = search(colored + 1, max(used, c + 1))
            for u in touched:
                seen[u] &= ~(1 << c)
            color[v] = -1
            if done:
                return True
            if used >= best:
                return False
        return False

    search(0, 0)
    return best
