"""Dense simple graphs on at most 64 vertices, stored as adjacency bit rows.

A :class:`Graph` is an immutable value: every operation that "modifies" a
graph returns a new one.  Vertex sets are plain ``int`` bitmasks throughout
the package (bit ``v`` set means vertex ``v`` is a member); helpers here
convert between masks and sorted vertex lists.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import Graph6Error

MAX_VERTICES = 64

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def complete_multipartite(cls, sizes: Iterable[int]) -> Graph:
        sizes = list(sizes)
        n = sum(sizes)
        full = (1 << n) - 1
        rows = []
        start = 0
        for s in sizes:
            block = ((1 << s) - 1) << start
            rows.extend([full & ~block] * s)
            start += s
        return cls(n, tuple(rows))

    # -- basic queries ----------------------------------------------------

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        full = self.vertex_mask
        out = []
        for u in range(self.n):
            missing = full & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(missing))
        return out

    def degree_in(self, v: int, mask: int) -> int:
        """Number of neighbours of ``v`` inside the vertex set ``mask``."""
        return (self.adj[v] & mask).bit_count()

    def edges_in(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    # -- derived graphs ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def induced(self, mask: int) -> Graph:
        """Subgraph induced on ``mask``, relabelled 0.. in increasing vertex order."""
        order = list(bits(mask))
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            rows.append(mask_of(pos[u] for u in bits(self.adj[v] & mask)))
        return Graph(len(order), tuple(rows))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def add_vertex(self, neighbours: int) -> Graph:
        """Append a vertex adjacent to the vertex set ``neighbours``."""
        v = self.n
        rows = [row | (1 << v) if neighbours >> u & 1 else row for u, row in enumerate(self.adj)]
        rows.append(neighbours)
        return Graph(self.n + 1, tuple(rows))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count}, g6={to_graph6(self)!r})"


# -- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("graph6 sizes above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 encodes {n} vertices; at most {MAX_VERTICES} supported")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need % 6 and body[-1] & ((1 << (6 - need % 6)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 string")
    return Graph(n, tuple(rows))


# -- adjacency-list text ------------------------------------------------------


def to_adjacency_text(g: Graph) -> str:
    """``n`` on the first line, then one ``v: u1 u2 ...`` line per vertex."""
    lines = [str(g.n)]
    for v in range(g.n):
        lines.append(f"{v}: " + " ".join(map(str, bits(g.adj[v]))))
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty adjacency text")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        head, _, tail = ln.partition(":")
        v = int(head)
        edges.extend((v, int(u)) for u in tail.split())
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_graph(text: str) -> Graph:
    """Read either graph6 or adjacency-list text, whichever ``text`` looks like."""
    stripped = text.strip()
    if ":" in stripped or "\n" in stripped or stripped.isdigit():
        return from_adjacency_text(stripped)
    return from_graph6(stripped)
