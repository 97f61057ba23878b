"""Explicit graph families and closed-form counts.

Turán graphs, suspensions and fans, the Chvátal-Hanson bound f(nu, Delta),
the bounded-matching/bounded-degree gadgets and the extremal family built by
planting a gadget inside one class of a Turán graph.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Literal

from .augment import EdgeAugmenter
from .canon import canonical_label
from .errors import ClassTooSmall, EmptySpec, GadgetSearchFailed, BudgetExceeded, InvalidR
from .graph import Graph, bits, from_graph6, to_graph6
from .invariants import matching_number, max_degree
from .partition import RPartition

log = logging.getLogger(__name__)

GADGET_SEARCH_BUDGET = 8
GADGET_FAMILY_BUDGET = 4


# -- Turán graphs ---------------------------------------------------------------


def turan_class_sizes(n: int, r: int) -> list[int]:
    if r < 2:
        raise InvalidR(f"r must be at least 2, got {r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(n: int, r: int) -> tuple[Graph, RPartition]:
    """T_r(n) with its natural partition; classes are consecutive, largest first."""
    sizes = turan_class_sizes(n, r)
    classes = []
    start = 0
    for s in sizes:
        classes.append(((1 << s) - 1) << start)
        start += s
    return Graph.complete_multipartite(sizes), RPartition(n, tuple(classes))


def turan_edge_count(n: int, r: int) -> int:
    sizes = turan_class_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


# -- suspensions and fans ---------------------------------------------------------


@dataclass(frozen=True)
class SuspensionSpec:
    """A multiset of component graphs joined to one new centre vertex."""

    components: tuple[Graph, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise EmptySpec("a suspension needs at least one component")

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def vertex_count(self) -> int:
        return 1 + sum(c.n for c in self.components)


def suspension(spec: SuspensionSpec | Iterable[Graph]) -> Graph:
    """Disjoint union of the components plus a centre joined to everything.

    The centre is vertex 0; component ``i`` follows in order.
    """
    if not isinstance(spec, SuspensionSpec):
        spec = SuspensionSpec(tuple(spec))
    body = Graph.empty(0)
    for comp in spec.components:
        body = body.disjoint_union(comp)
    rows = [(1 << body.n) - 1 << 1]
    rows.extend((row << 1) | 1 for row in body.adj)
    return Graph(body.n + 1, tuple(rows))


def fan(k: int, r: int) -> Graph:
    """The (k, r)-fan: k copies of K_{r-1} sharing one common centre."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if r < 2:
        raise InvalidR(f"r must be at least 2, got {r}")
    return suspension([Graph.complete(r - 1)] * k)


# -- f(nu, Delta) -------------------------------------------------------------------


def chvatal_hanson(nu: int, delta: int) -> int:
    """Max edges of a graph with matching number <= nu and max degree <= delta.

    Zero when either bound is zero.
    """
    if nu < 0 or delta < 0:
        raise ValueError("nu and delta must be non-negative")
    if nu == 0 or delta == 0:
        return 0
    half_up = (delta + 1) // 2
    return nu * delta + (delta // 2) * (nu // half_up)


@dataclass(frozen=True)
class ChvatalHansonParams:
    nu: int
    delta: int

    def __post_init__(self) -> None:
        if self.nu < 1 or self.delta < 1:
            raise ValueError("nu and delta must both be positive")

    @property
    def value(self) -> int:
        return chvatal_hanson(self.nu, self.delta)


def ahs_value(k: int) -> int:
    """f(k-1, k-1) by parity: k^2 - k for odd k, k^2 - 3k/2 for even k."""
    return k * k - k if k % 2 else k * k - 3 * k // 2


# -- gadgets --------------------------------------------------------------------------


@dataclass(frozen=True)
class GadgetSpec:
    k: int
    realized: Graph
    parity: Literal["odd", "even"]

    @property
    def vertex_count(self) -> int:
        return self.realized.n

    def check(self) -> list[str]:
        """Names of violated gadget invariants (empty when the gadget is valid)."""
        g, k = self.realized, self.k
        problems = []
        want_n = (0 if k == 1 else 2 * k) if k % 2 else 2 * k - 1
        if g.n != want_n:
            problems.append(f"vertex count {g.n} != {want_n}")
        if g.edge_count != chvatal_hanson(k - 1, k - 1):
            problems.append(f"edge count {g.edge_count} != f(k-1,k-1)")
        if max_degree(g) > k - 1:
            problems.append("max degree exceeds k-1")
        if matching_number(g) > k - 1:
            problems.append("matching number exceeds k-1")
        return problems


def _even_gadget_search(k: int) -> Graph:
    """First graph, in include-first lexicographic edge order, on 2k-1 vertices
    with (2k-1)(k-1)/2 rounded down edges and maximum degree k-1."""
    m = 2 * k - 1
    cap = k - 1
    target = chvatal_hanson(k - 1, k - 1)
    slack = m * cap - 2 * target
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    deg = [0] * m
    chosen: list[tuple[int, int]] = []

    def undecided(x: int, i: int, j: int) -> int:
        # pairs touching x that come after (i, j) in lexicographic order
        if x < i:
            return 0
        if x == i:
            return m - 1 - j
        return (x - i - 1) + (1 if x > j else 0) + (m - 1 - x)

    def feasible(idx: int) -> bool:
        i, j = pairs[idx - 1] if idx else (0, 0)
        if idx == 0:
            return True
        need = 0
        for x in range(m):
            short = cap - deg[x] - undecided(x, i, j)
            if short > 0:
                need += short
                if need > slack:
                    return False
        return len(chosen) + (len(pairs) - idx) >= target

    def search(idx: int) -> bool:
        if len(chosen) == target:
            return True
        if idx == len(pairs) or not feasible(idx):
            return False
        u, v = pairs[idx]
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            if search(idx + 1):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        return search(idx + 1)

    if not search(0):
        raise GadgetSearchFailed(f"no even gadget found for k={k}")
    return Graph.from_edges(m, chosen)


def _cache_dir() -> Path | None:
    root = os.environ.get("TURANLAB_CACHE")
    return Path(root) if root else None


@lru_cache(maxsize=None)
def _even_gadget(k: int) -> Graph:
    cache = _cache_dir()
    path = cache / f"gadget_k{k}.g6" if cache else None
    if path is not None and path.exists():
        g = from_graph6(path.read_text())
        if not GadgetSpec(k, g, "even").check():
            return g
        log.warning("ignoring invalid cached gadget %s", path)
    g = _even_gadget_search(k)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(to_graph6(g) + "\n")
    return g


def ahs_gadget(k: int, budget: int = GADGET_SEARCH_BUDGET) -> GadgetSpec:
    """Extremal graph for f(k-1, k-1): two disjoint K_k (odd k) or a searched
    near-(k-1)-regular graph on 2k-1 vertices (even k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k % 2:
        if k == 1:
            return GadgetSpec(1, Graph.empty(0), "odd")
        return GadgetSpec(k, Graph.complete(k).disjoint_union(Graph.complete(k)), "odd")
    if k > budget:
        raise BudgetExceeded(f"even gadget search for k={k} exceeds budget k<={budget}")
    spec = GadgetSpec(k, _even_gadget(k), "even")
    problems = spec.check()
    if problems:
        raise GadgetSearchFailed(f"gadget for k={k} invalid: {problems}")
    return spec


def gadget_family(k: int, budget: int = GADGET_FAMILY_BUDGET) -> list[Graph]:
    """All gadgets for ``k`` up to isomorphism (one for odd k)."""
    if k % 2:
        return [ahs_gadget(k).realized]
    if k > budget:
        raise BudgetExceeded(f"gadget family enumeration for k={k} exceeds budget k<={budget}")
    m = 2 * k - 1
    target = chvatal_hanson(k - 1, k - 1)
    aug = EdgeAugmenter(m)

    def accept(g: Graph, u: int, v: int) -> bool:
        return g.edge_count < target and g.degree(u) < k - 1 and g.degree(v) < k - 1

    found = [g for g in aug.walk(accept) if g.edge_count == target]
    found.sort(key=canonical_label)
    return found


# -- extremal family -------------------------------------------------------------------


def extremal_member(n: int, k: int, r: int, gadget: Graph | None = None,
                    class_index: int = 0) -> tuple[Graph, RPartition]:
    """T_r(n) with a gadget planted on the first vertices of one class.

    By default the gadget is ``ahs_gadget(k)`` and goes into class 0, a
    largest class.
    """
    base, part = turan_graph(n, r)
    if gadget is None:
        gadget = ahs_gadget(k).realized
    cls = part.classes[class_index]
    members = list(bits(cls))
    if len(members) < gadget.n:
        raise ClassTooSmall(
            f"class {class_index} of T_{r}({n}) has {len(members)} vertices, gadget needs {gadget.n}")
    rows = list(base.adj)
    for u, v in gadget.edges():
        a, b = members[u], members[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows)), part


def gadget_vertices(k: int) -> int:
    if k % 2:
        return 0 if k == 1 else 2 * k
    return 2 * k - 1


def smallest_valid_n(k: int, r: int) -> int:
    """Least n >= r whose largest Turán class can host the gadget."""
    need = gadget_vertices(k)
    return max(r, r * (need - 1) + 1) if need else r


def extremal_family(n: int, k: int, r: int, any_class: bool = False) -> list[tuple[Graph, RPartition]]:
    """Non-isomorphic members of the extremal family on ``n`` vertices.

    Every gadget for ``k`` is planted in class 0, or, with ``any_class``, in
    every class large enough to hold it.
    """
    _, part = turan_graph(n, r)
    indices = range(r) if any_class else [0]
    out = []
    seen = set()
    for gadget in gadget_family(k):
        for ci in indices:
            if part.classes[ci].bit_count() < gadget.n:
                if ci == 0:
                    raise ClassTooSmall(
                        f"largest class of T_{r}({n}) cannot hold a {gadget.n}-vertex gadget")
                continue
            g, p = extremal_member(n, k, r, gadget, ci)
            code = canonical_label(g)
            if code not in seen:
                seen.add(code)
                out.append((g, p))
    return out
