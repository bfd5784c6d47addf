"""Canonical labeling by colour refinement plus individualization search.

The ordered partition is refined to an equitable one (1-dimensional
Weisfeiler-Leman with cells sorted by their neighbour-count signatures).
Non-discrete partitions are resolved by individualizing each vertex of
the first smallest non-singleton cell in turn. Among the leaves of the
search tree the lexicographically smallest upper-triangle bit string wins.
Leaves with equal strings yield automorphisms, which prune siblings in
the same orbit.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .graph import Graph, _bits

Cells = list[list[int]]


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Refine an ordered partition until every cell is equitable."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new: Cells = []
        split = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in c}
            first = sig[c[0]]
            if all(sig[v] == first for v in c):
                new.append(c)
                continue
            split = True
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                groups.setdefault(sig[v], []).append(v)
            new.extend(groups[key] for key in sorted(groups))
        cells = new
        if not split:
            return cells


def _leaf_code(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        r = rows[order[j]]
        for i in range(j):
            code = code << 1 | (r >> order[i] & 1)
    return code


def _orbit(w: int, gens: list[list[int]]) -> set[int]:
    orbit = {w}
    stack = [w]
    while stack:
        x = stack.pop()
        for p in gens:
            y = p[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def _search(rows: Sequence[int], n: int) -> tuple[int, list[int]]:
    best_code = -1
    best_order: list[int] = []
    seen: dict[int, list[int]] = {}
    autos: list[list[int]] = []

    def visit(cells: Cells, path: tuple[int, ...]) -> None:
        nonlocal best_code, best_order
        target = -1
        size = n + 1
        for idx, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = idx, len(c)
        if target < 0:
            order = [c[0] for c in cells]
            code = _leaf_code(rows, order)
            prev = seen.get(code)
            if prev is None:
                seen[code] = order
                if best_code < 0 or code < best_code:
                    best_code, best_order = code, order
            else:
                perm = list(range(n))
                for a, b in zip(prev, order):
                    perm[a] = b
                autos.append(perm)
            return
        cell = cells[target]
        done: list[int] = []
        for w in cell:
            if done:
                gens = [p for p in autos if all(p[v] == v for v in path)]
                if gens and not _orbit(w, gens).isdisjoint(done):
                    continue
            rest = [x for x in cell if x != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            visit(refine(rows, child), path + (w,))
            done.append(w)

    visit(refine(rows, [list(range(n))]), ())
    return best_code, best_order


def _code_bytes(n: int, code: int) -> bytes:
    m = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((m + 7) // 8, "big")


def canonical_code_of_rows(n: int, rows: Sequence[int]) -> bytes:
    """Uncached canonical code for raw adjacency rows."""
    code, _ = _search(rows, n)
    return _code_bytes(n, max(code, 0))


@lru_cache(maxsize=1 << 17)
def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant code: size byte followed by the canonical
    upper-triangle bit string, column by column, big-endian."""
    return canonical_code_of_rows(g.n, g.rows)


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabeling realizes the canonical code.

    ``order[i]`` is the original vertex that receives label ``i``.
    """
    _, order = _search(g.rows, g.n)
    return order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for v in range(g.n):
        m = 0
        for w in _bits(g.rows[v]):
            m |= 1 << pos[w]
        rows[pos[v]] = m
    return Graph(g.n, tuple(rows))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)
