"""Canonical labelling by individualisation-refinement.

The search follows the usual nauty recipe at toy scale: refine an ordered
vertex partition to an equitable one, branch by individualising each vertex
of the first smallest non-singleton cell, and keep the leaf whose relabelled
adjacency is lexicographically largest.  Automorphisms found at equal leaves
prune the tree twice over: sibling branches in the orbit of an explored one
are skipped, and a leaf equivalent to the first or best leaf jumps straight
back to where its path diverged.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, bits, to_graph6


@dataclass
class CanonicalForm:
    code: bytes
    labeling: list[int]  # labeling[i] = original vertex placed at canonical position i
    generators: list[list[int]] = field(default_factory=list)

    @property
    def position(self) -> list[int]:
        inv = [0] * len(self.labeling)
        for i, v in enumerate(self.labeling):
            inv[v] = i
        return inv


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of the ordered partition ``cells``.

    Splitting is driven only by cell positions and neighbour counts, so the
    result is equivariant under relabelling.
    """
    cells = [list(c) for c in cells]
    i = 0
    while i < len(cells):
        smask = 0
        for v in cells[i]:
            smask |= 1 << v
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[c] for c in sorted(groups))
        cells = out
        i = 0 if split else i + 1
    return cells


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def orbits(n: int, generators: list[list[int]]) -> list[int]:
    """Orbit representative (least element) of each vertex under ``generators``."""
    return _orbit_roots(n, generators)


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first_path: list[int] | None = None
        self.first_key: tuple[int, ...] | None = None
        self.first_lab: list[int] = []
        self.best_path: list[int] = []
        self.best_key: tuple[int, ...] | None = None
        self.best_lab: list[int] = []
        self.gens: list[list[int]] = []

    def _leaf_key(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        key = []
        for v in lab:
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << pos[u]
            key.append(row)
        return tuple(key)

    @staticmethod
    def _diverge(a: list[int], b: list[int]) -> int:
        i = 0
        while i < len(a) and i < len(b) and a[i] == b[i]:
            i += 1
        return i

    def _automorphism(self, lab: list[int], ref: list[int]) -> list[int]:
        gamma = [0] * self.n
        for x, y in zip(lab, ref):
            gamma[x] = y
        return gamma

    def run(self, cells: list[list[int]], path: list[int]) -> int:
        """Explore the subtree at ``path``; return the depth to resume at."""
        cells = refine(self.adj, cells)
        depth = len(path)
        target_idx = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target_idx < 0 or len(cell) < len(cells[target_idx])):
                target_idx = idx
        if target_idx < 0:
            return self._leaf([c[0] for c in cells], path)

        target = sorted(cells[target_idx])
        tried: list[int] = []
        for v in target:
            if tried:
                fixing = [g for g in self.gens if all(g[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(self.n, fixing)
                    if any(roots[v] == roots[w] for w in tried):
                        continue
            tried.append(v)
            rest = [w for w in cells[target_idx] if w != v]
            child = cells[:target_idx] + [[v], rest] + cells[target_idx + 1:]
            back = self.run(child, path + [v])
            if back < depth:
                return back
        return depth

    def _leaf(self, lab: list[int], path: list[int]) -> int:
        key = self._leaf_key(lab)
        depth = len(path)
        if self.first_key is None:
            self.first_key, self.first_lab, self.first_path = key, lab, list(path)
            self.best_key, self.best_lab, self.best_path = key, lab, list(path)
            return depth
        if key == self.first_key:
            self.gens.append(self._automorphism(lab, self.first_lab))
            return self._diverge(path, self.first_path)
        if key == self.best_key:
            self.gens.append(self._automorphism(lab, self.best_lab))
            return self._diverge(path, self.best_path)
        if key > self.best_key:
            self.best_key, self.best_lab, self.best_path = key, lab, list(path)
        return depth


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Canonical form of ``g``, optionally respecting a vertex colouring.

    With ``colors`` the canonical relabelling only permutes vertices within a
    colour class and classes keep the order of their colour values.
    """
    if g.n == 0:
        return CanonicalForm(to_graph6(g).encode(), [])
    if colors is None:
        cells = [list(range(g.n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    search = _Search(g)
    search.run(cells, [])
    lab = search.best_lab
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    code = to_graph6(g.relabel(pos)).encode()
    if colors is not None:
        code += b"|" + b",".join(str(len(c)).encode() for c in cells)
    return CanonicalForm(code, lab, search.gens)


def canonical_label(g: Graph) -> bytes:
    """Byte string that is equal for two graphs exactly when they are isomorphic."""
    return canonical_form(g).code


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class with canonical labels."""
    return g.relabel(canonical_form(g).position)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.edge_count == b.edge_count and canonical_label(a) == canonical_label(b)
