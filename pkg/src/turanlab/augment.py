"""Orderly generation by canonical edge augmentation.

Each graph is reached from exactly one parent: its canonical deletion edge
is the edge occupying the last upper-triangle position in the canonical
labelling, and a child is kept only when deleting that edge gives back a
graph isomorphic to the parent.  Children of one parent are deduplicated
locally by canonical code.  Any property closed under edge deletion
(H-freeness, degree bounds, subgraphs of a host) can restrict the tree via
``accept``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .canon import CanonicalForm, canonical_form
from .graph import Edge, Graph

CanonFn = Callable[[Graph], CanonicalForm]
AcceptFn = Callable[[Graph, int, int], bool]


def _deletion_edge(g: Graph, form: CanonicalForm) -> Edge:
    pos = form.position
    best = None
    best_key = (-1, -1)
    for u, v in g.edges():
        i, j = sorted((pos[u], pos[v]))
        if (j, i) > best_key:
            best_key, best = (j, i), (u, v)
    assert best is not None
    return best


def _degree_signature(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(row.bit_count() for row in g.adj))


@dataclass
class AugmentStats:
    nodes: int = 0
    iso_rejections: int = 0


class EdgeAugmenter:
    """Child generator for the canonical edge-augmentation tree.

    ``pairs`` restricts which vertex pairs may ever become edges (used for
    subgraphs of a fixed host); ``canon`` may be any isomorphism-invariant
    canonical form, e.g. a colour-respecting one.
    """

    def __init__(self, n: int, canon: CanonFn | None = None,
                 pairs: Sequence[Edge] | None = None):
        self.n = n
        self.canon = canon or canonical_form
        if pairs is None:
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.pairs = list(pairs)
        self.stats = AugmentStats()

    def candidates(self, g: Graph) -> list[Edge]:
        return [(u, v) for u, v in self.pairs if not g.has_edge(u, v)]

    def children(self, g: Graph, code: bytes, addable: Sequence[Edge]) -> list[tuple[Graph, bytes]]:
        """Accepted children ``g + e`` for ``e`` in ``addable``, with their codes."""
        out = []
        seen: set[bytes] = set()
        parent_sig = _degree_signature(g)
        for u, v in addable:
            child = g.add_edge(u, v)
            form = self.canon(child)
            if form.code in seen:
                self.stats.iso_rejections += 1
                continue
            a, b = _deletion_edge(child, form)
            if {a, b} != {u, v}:
                back = child.remove_edge(a, b)
                if _degree_signature(back) != parent_sig or self.canon(back).code != code:
                    self.stats.iso_rejections += 1
                    continue
            seen.add(form.code)
            out.append((child, form.code))
        return out

    def walk(self, accept: AcceptFn | None = None, root: Graph | None = None) -> Iterator[Graph]:
        """Depth-first stream of one graph per isomorphism class."""
        root = root if root is not None else Graph.empty(self.n)
        stack = [(root, self.canon(root).code)]
        while stack:
            g, code = stack.pop()
            self.stats.nodes += 1
            yield g
            addable = self.candidates(g)
            if accept is not None:
                addable = [(u, v) for u, v in addable if accept(g, u, v)]
            kids = self.children(g, code, addable)
            stack.extend(reversed(kids))
