"""Deterministic test-graph constructions and direct parameter checks.

Vertex numbering is frozen (tests pin graph6 strings):

* ``cycle(n)``, ``path(n)``: 0..n-1 in order along the cycle/path.
* ``petersen()``: outer 5-cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2)%5),
  spokes i ~ 5+i.
* ``complete_multipartite(parts)``: parts take consecutive label blocks.
* ``hypercube(d)``: vertex v is its d-bit binary code.
* ``rook(a, b)``: cell (i, j) is vertex i*b + j.
* ``disjoint_union(g, h)``: h's vertices are shifted by g.n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import GraphError
from .graph import MAX_VERTICES, Graph, _bits, common_neighbors, distance_matrix, from_edges
from .params import SrgParams, WdrParams


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def paley(q: int) -> Graph:
    if not _is_prime(q):
        raise GraphError(f"paley needs a prime order, got {q}")
    if q % 4 != 1:
        raise GraphError(f"paley needs q = 1 (mod 4), got {q}")
    if q > 61:
        raise GraphError(f"paley order {q} exceeds 61")
    residues = {x * x % q for x in range(1, q)}
    return from_edges(q, [(i, j) for i, j in combinations(range(q), 2) if (j - i) % q in residues])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return from_edges(n, [])


def complete_multipartite(parts) -> Graph:
    parts = list(parts)
    if not parts or min(parts) < 1:
        raise GraphError("complete_multipartite needs positive part sizes")
    label = []
    for idx, size in enumerate(parts):
        label += [idx] * size
    n = len(label)
    return from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if label[i] != label[j]])


def hypercube(d: int) -> Graph:
    if not 1 <= d <= 5:
        raise GraphError(f"hypercube dimension must be 1..5, got {d}")
    n = 1 << d
    return from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def rook(a: int, b: int) -> Graph:
    """Cartesian product K_a x K_b (rook's graph on an a-by-b board)."""
    n = a * b
    if a < 1 or b < 1 or n > MAX_VERTICES:
        raise GraphError(f"rook({a}, {b}) out of range")
    return from_edges(n, [
        (u, v) for u, v in combinations(range(n), 2)
        if u // b == v // b or u % b == v % b
    ])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError("disjoint union exceeds the vertex cap")
    return Graph(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def clique_union(sizes) -> Graph:
    sizes = list(sizes)
    g = complete(sizes[0])
    for s in sizes[1:]:
        g = disjoint_union(g, complete(s))
    return g


def subdivided_star() -> Graph:
    """K_{1,3} with one edge subdivided: centre 0, leaves 1 and 2, path 0-3-4."""
    return from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def collision_pair(l: int) -> tuple[Graph, Graph]:
    """(P_{2l}, C_{l+1} + P_{l-1}); the two share their l-deck."""
    if l < 2 or 2 * l > MAX_VERTICES:
        raise GraphError(f"collision_pair needs 2 <= l <= 31, got {l}")
    return path(2 * l), disjoint_union(cycle(l + 1), path(l - 1))


GENERATORS = {
    "petersen": petersen,
    "paley": paley,
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "empty": empty,
    "hypercube": hypercube,
    "rook": rook,
    "multipartite": lambda *parts: complete_multipartite(parts),
    "cliques": lambda *sizes: clique_union(sizes),
    "subdivided-star": subdivided_star,
}


# direct parameter checks ---------------------------------------------------

def _regular_degree(g: Graph) -> int | None:
    degs = {r.bit_count() for r in g.rows}
    return degs.pop() if len(degs) == 1 else None


def srg_params(g: Graph) -> SrgParams | None:
    """(k, lambda, mu) by checking every vertex pair; ``None`` unless
    regular with constant counts, at least one edge, one nonadjacent pair
    and mu >= 1."""
    k = _regular_degree(g)
    if k is None:
        return None
    lam, mu = set(), set()
    for x, y in combinations(range(g.n), 2):
        (lam if g.adjacent(x, y) else mu).add(common_neighbors(g, x, y))
    if len(lam) != 1 or len(mu) != 1:
        return None
    p = SrgParams(k, lam.pop(), mu.pop())
    return p if p.mu >= 1 else None


def wdr_params(g: Graph) -> WdrParams | None:
    k = _regular_degree(g)
    if k is None:
        return None
    dist = distance_matrix(g)
    lam, mu2 = set(), set()
    for x, y in combinations(range(g.n), 2):
        if dist[x, y] == 1:
            lam.add(common_neighbors(g, x, y))
        elif dist[x, y] == 2:
            mu2.add(common_neighbors(g, x, y))
    if len(lam) != 1 or len(mu2) != 1:
        return None
    return WdrParams(k, lam.pop(), mu2.pop())


@dataclass(frozen=True)
class IntersectionArraySrg:
    b: tuple[int, int, int]
    c: tuple[int, int, int]


def intersection_array_srg(g: Graph) -> IntersectionArraySrg | None:
    """Intersection array of a diameter-2 strongly regular graph, confirmed
    against neighbour counts over the distance partition."""
    p = srg_params(g)
    if p is None:
        return None
    dist = distance_matrix(g)
    if dist.max() != 2 or (dist < 0).any():
        return None
    arr = IntersectionArraySrg((p.k, p.k - p.lam - 1, 0), (0, 1, p.mu))
    for u in range(g.n):
        nbrs = list(_bits(g.rows[u]))
        for v in range(g.n):
            j = int(dist[u, v])
            d = dist[nbrs, v]
            if int(np.sum(d == j + 1)) != arr.b[j] or int(np.sum(d == j - 1)) != arr.c[j]:
                return None
    return arr
