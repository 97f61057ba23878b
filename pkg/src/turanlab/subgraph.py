"""Subgraph containment (not necessarily induced) by backtracking.

Host vertices are first grouped into twin classes: vertices with the same
open neighbourhood (an independent set of interchangeable vertices) or the
same closed neighbourhood (a clique of them).  Adjacency between two
different classes is all-or-nothing, so an embedding only has to pick a class
for every pattern vertex, subject to class capacities.  This collapses the
symmetric blow-up that dense multipartite hosts otherwise cause.  On the
pattern side, twin pattern vertices are interchangeable and are forced to
take non-decreasing class indices.
"""
from __future__ import annotations

from .canon import canonical_form
from .graph import Graph, bits


def _twin_classes(g: Graph, fixed: tuple[int, ...] = ()) -> list[list[int]]:
    """Partition of V(g) into twin classes; vertices in ``fixed`` stay singletons."""
    open_groups: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for v in range(g.n):
        if v in fixed:
            continue
        open_groups.setdefault(g.adj[v], []).append(v)
        closed_groups.setdefault(g.adj[v] | 1 << v, []).append(v)
    classes: list[list[int]] = []
    placed = set(fixed)
    for v in range(g.n):
        if v in placed:
            if v in fixed:
                classes.append([v])
            continue
        grp = open_groups[g.adj[v]]
        if len(grp) == 1:
            grp = closed_groups[g.adj[v] | 1 << v]
        classes.append(grp)
        placed.update(grp)
    return classes


def _pattern_order(pattern: Graph, forced: dict[int, int]) -> list[int]:
    rest = sorted((p for p in range(pattern.n) if p not in forced),
                  key=lambda p: (-pattern.degree(p), p))
    return list(forced) + rest


def _embeds(host: Graph, pattern: Graph, forced: dict[int, int]) -> bool:
    classes = _twin_classes(host, tuple(forced.values()))
    cls_of = [0] * host.n
    for i, members in enumerate(classes):
        for v in members:
            cls_of[v] = i
    nc = len(classes)
    cap = [len(c) for c in classes]
    cdeg = [host.degree(c[0]) for c in classes]
    cadj = []
    for i, members in enumerate(classes):
        rep = members[0]
        m = 0
        for u in bits(host.adj[rep]):
            m |= 1 << cls_of[u]
        # a clique class of size >= 2 contains its own bit; an independent one never does
        cadj.append(m)

    order = _pattern_order(pattern, forced)
    index = {p: i for i, p in enumerate(order)}
    earlier_nbrs = [[q for q in bits(pattern.adj[p]) if index[q] < index[p]] for p in order]

    # pattern twins, excluding forced vertices, become an ordering constraint
    prev_twin = [-1] * len(order)
    free = tuple(p for p in range(pattern.n) if p not in forced)
    groups: dict[tuple[str, int], list[int]] = {}
    for p in free:
        groups.setdefault(("o", pattern.adj[p]), []).append(p)
    seen_twin = set()
    for p in free:
        grp = groups[("o", pattern.adj[p])]
        if len(grp) == 1:
            grp = [q for q in free if pattern.adj[q] | 1 << q == pattern.adj[p] | 1 << p]
        key = tuple(sorted(grp))
        if len(grp) < 2 or key in seen_twin:
            continue
        seen_twin.add(key)
        seq = sorted(grp, key=lambda q: index[q])
        for a, b in zip(seq, seq[1:]):
            prev_twin[index[b]] = index[a]

    pdeg = [pattern.degree(p) for p in order]
    by_degree = []
    for d in pdeg:
        m = 0
        for i in range(nc):
            if cdeg[i] >= d:
                m |= 1 << i
        by_degree.append(m)
    forced_cls = [-1] * len(order)
    for p, h in forced.items():
        forced_cls[index[p]] = cls_of[h]

    assign = [-1] * len(order)
    avail = (1 << nc) - 1

    def extend(i: int) -> bool:
        nonlocal avail
        if i == len(order):
            return True
        cand = by_degree[i] & avail
        if forced_cls[i] >= 0:
            cand &= 1 << forced_cls[i]
        for q in earlier_nbrs[i]:
            cand &= cadj[assign[index[q]]]
        if prev_twin[i] >= 0:
            cand &= ~((1 << assign[prev_twin[i]]) - 1)
        for c in bits(cand):
            assign[i] = c
            cap[c] -= 1
            if cap[c] == 0:
                avail &= ~(1 << c)
            ok = extend(i + 1)
            if cap[c] == 0:
                avail |= 1 << c
            cap[c] += 1
            if ok:
                return True
        assign[i] = -1
        return False

    return extend(0)


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """True when ``pattern`` is isomorphic to a (not necessarily induced) subgraph of ``host``."""
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return False
    if pattern.n == 0:
        return True
    return _embeds(host, pattern, {})


def contains_subgraph_through_edge(host: Graph, pattern: Graph, u: int, v: int,
                                   arcs: list[tuple[int, int]] | None = None) -> bool:
    """True when some copy of ``pattern`` in ``host`` uses the host edge ``uv``.

    ``arcs`` may restrict the pattern edges tried to one directed edge per
    automorphism orbit (see :func:`arc_orbit_representatives`).
    """
    if not host.has_edge(u, v):
        return False
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return False
    if arcs is None:
        arcs = [(p, q) for p in range(pattern.n) for q in bits(pattern.adj[p])]
    return any(_embeds(host, pattern, {p: u, q: v}) for p, q in arcs)


def arc_orbit_representatives(pattern: Graph) -> list[tuple[int, int]]:
    """One directed edge per orbit of the automorphisms found while canonising
    ``pattern``; forcing these arcs onto a host edge covers every placement."""
    gens = canonical_form(pattern).generators
    arcs = [(p, q) for p in range(pattern.n) for q in bits(pattern.adj[p])]
    seen: set[tuple[int, int]] = set()
    reps = []
    for arc in arcs:
        if arc in seen:
            continue
        reps.append(arc)
        orbit = {arc}
        frontier = [arc]
        while frontier:
            p, q = frontier.pop()
            for g in gens:
                img = (g[p], g[q])
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
    return reps
