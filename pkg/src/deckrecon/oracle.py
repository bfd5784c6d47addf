"""Brute-force ground truth on graphs with at most seven vertices."""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .canon import canonical_code_of_rows, canonical_form
from .deck import Deck, compute_deck, deck_digest, decks_equal
from .errors import OutOfOracleRange
from .graph import Graph, add_vertex

MAX_ORACLE_N = 7

#: isomorphism classes of graphs on 1..7 vertices
CLASS_COUNTS = (1, 2, 4, 11, 34, 156, 1044)


def _check_range(n: int) -> None:
    if not 1 <= n <= MAX_ORACLE_N:
        raise OutOfOracleRange(f"oracle covers 1..{MAX_ORACLE_N} vertices, got {n}")


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    # Deleting the last vertex of any n-vertex graph leaves a graph isomorphic
    # to some (n-1)-class representative, so extending every representative by
    # a new vertex with every possible neighbourhood reaches every class.
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[bytes, Graph] = {}
    for base in _classes(n - 1):
        for mask in range(1 << (n - 1)):
            g = add_vertex(base, [i for i in range(n - 1) if mask >> i & 1])
            found.setdefault(canonical_form(g), g)
    return tuple(found[c] for c in sorted(found))


def enumerate_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class, sorted by canonical code."""
    _check_range(n)
    return list(_classes(n))


def _sweep_chunk(n: int, start: int, stop: int) -> set[bytes]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    codes = set()
    for mask in range(start, stop):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        codes.add(canonical_code_of_rows(n, rows))
    return codes


def sweep_labeled(n: int, workers: int = 1) -> set[bytes]:
    """Canonical codes of all 2^C(n,2) labeled graphs on n vertices."""
    _check_range(n)
    total = 1 << (n * (n - 1) // 2)
    if workers <= 1:
        return _sweep_chunk(n, 0, total)
    step = -(-total // workers)
    bounds = [(n, s, min(s + step, total)) for s in range(0, total, step)]
    codes: set[bytes] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_sweep_chunk, *zip(*bounds)):
            codes |= part
    return codes


@lru_cache(maxsize=None)
def _class_deck(g: Graph, k: int) -> Deck:
    return compute_deck(g, k)


@dataclass(frozen=True)
class PreimageResult:
    deck_code: str
    preimages: list[bytes]
    truncated: bool
    graphs: list[Graph] = field(default_factory=list, repr=False)


def find_deck_preimages(n: int, deck: Deck, cap: int = 10) -> PreimageResult:
    _check_range(n)
    if deck.n != n or not 1 <= deck.k < n:
        raise ValueError(f"deck (n={deck.n}, k={deck.k}) does not fit n={n}")
    found: list[Graph] = []
    truncated = False
    for g in _classes(n):
        if decks_equal(_class_deck(g, deck.k), deck):
            if len(found) == cap:
                truncated = True
                break
            found.append(g)
    return PreimageResult(deck_digest(deck), [canonical_form(g) for g in found], truncated, found)


def is_l_reconstructible(g: Graph, l: int) -> bool:
    """True iff no other class on g.n vertices shares g's (n-l)-deck."""
    _check_range(g.n)
    if not 1 <= l < g.n:
        raise ValueError(f"l must be in 1..{g.n - 1}, got {l}")
    res = find_deck_preimages(g.n, compute_deck(g, g.n - l), cap=2)
    return res.preimages == [canonical_form(g)]


def find_collisions(n: int, k: int) -> list[list[Graph]]:
    """Groups of pairwise non-isomorphic n-vertex graphs with equal k-decks.

    Grouping is by digest; every group is confirmed by exact comparison.
    """
    _check_range(n)
    if not 1 <= k < n:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    by_digest: dict[str, list[Graph]] = defaultdict(list)
    for g in _classes(n):
        by_digest[deck_digest(_class_deck(g, k))].append(g)
    groups = []
    for members in by_digest.values():
        # split further on exact equality so a digest clash can never merge decks
        exact: list[list[Graph]] = []
        for g in members:
            for grp in exact:
                if decks_equal(_class_deck(grp[0], k), _class_deck(g, k)):
                    grp.append(g)
                    break
            else:
                exact.append([g])
        groups += [grp for grp in exact if len(grp) >= 2]
    return sorted(groups, key=lambda grp: canonical_form(grp[0]))
