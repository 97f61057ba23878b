"""Seeded random graphs for property sweeps (counter-based Philox streams)."""
from __future__ import annotations

import numpy as np

from .certificates import check_k_good
from .graph import Graph
from .partition import RPartition


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def random_graph(rng: np.random.Generator, n: int, density: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def planted_k_good(rng: np.random.Generator, n: int, k: int, r: int,
                   tries: int = 200) -> tuple[Graph, RPartition] | None:
    """A graph on ``n`` vertices together with a k-good r-partition of it.

    Cross edges are kept with a random density and a few edges are sprinkled
    inside the classes; candidates are rejection-sampled through
    :func:`check_k_good`.
    """
    for _ in range(tries):
        labels = list(range(r)) + [int(x) for x in rng.integers(0, r, n - r)]
        rng.shuffle(labels)
        cross = float(rng.uniform(0.5, 1.0))
        inner = float(rng.uniform(0.0, 0.35))
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < (inner if labels[u] == labels[v] else cross):
                    edges.append((u, v))
        g = Graph.from_edges(n, edges)
        p = RPartition.from_labels(labels, r)
        if check_k_good(g, p, k).ok:
            return g, p
    return None
