"""Labeled simple graphs on at most 62 vertices.

Adjacency is kept as one integer bit mask per vertex: bit ``j`` of
``rows[i]`` is set iff ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError

MAX_VERTICES = 62

#: distance assigned to pairs in different components
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if r >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in _bits(r):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if i < j]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def from_adjacency(matrix) -> Graph:
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError("adjacency matrix must be square")
    n = a.shape[0]
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]])


def degree_sequence(g: Graph) -> list[int]:
    return sorted((r.bit_count() for r in g.rows), reverse=True)


def common_neighbors(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise GraphError("common_neighbors needs two distinct vertices")
    return (g.rows[x] & g.rows[y]).bit_count()


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances; ``UNREACHABLE`` marks pairs in different components."""
    n = g.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            nxt &= ~seen
            for v in _bits(nxt):
                dist[s, v] = d
            seen |= nxt
            frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        new = g.rows[v] & ~seen
        seen |= new
        queue.extend(_bits(new))
    return seen == (1 << g.n) - 1


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced on ``keep``, renumbered in ascending original order."""
    verts = sorted(set(keep))
    if not verts:
        raise GraphError("induced subgraph of an empty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise GraphError("vertex out of range")
    return _induce(g.rows, verts)


def _induce(rows: Sequence[int], verts: Sequence[int]) -> Graph:
    # verts must be sorted and distinct; skips validation for the deck hot loop
    new_rows = []
    for v in verts:
        r = rows[v]
        m = 0
        for pos, w in enumerate(verts):
            if r >> w & 1:
                m |= 1 << pos
        new_rows.append(m)
    g = object.__new__(Graph)
    object.__setattr__(g, "n", len(verts))
    object.__setattr__(g, "rows", tuple(new_rows))
    return g


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertices")
    return from_edges(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Append vertex ``g.n`` adjacent to ``neighbors``."""
    v = g.n
    nbrs = set(neighbors)
    rows = [r | (1 << v) if i in nbrs else r for i, r in enumerate(g.rows)]
    mask = 0
    for i in nbrs:
        mask |= 1 << i
    rows.append(mask)
    return Graph(v + 1, tuple(rows))
