"""Inference from an (n-2)-deck alone.

For a k-regular graph on n vertices with e = kn/2 edges, a card omitting
the pair {u, v} lacks 2k-1 edges when u ~ v and 2k otherwise, and the
common neighbours of u and v are exactly the card vertices of degree k-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .canon import canonical_form
from .deck import Card, Deck, edge_count_from_deck, missing_edge_count, subdeck
from .errors import InconsistentDeck, NotRegularConsistent
from .generators import path
from .params import SrgParams, WdrParams

_P3 = canonical_form(path(3))


@dataclass(frozen=True)
class CardClassification:
    omitted_adjacent: bool
    common_count: int


def _check_pre(n: int, deck: Deck, min_n: int = 6) -> None:
    if n < min_n:
        raise ValueError(f"need at least {min_n} vertices, got {n}")
    if deck.n != n or deck.k != n - 2:
        raise ValueError(f"expected an {n - 2}-deck of an {n}-vertex graph, got n={deck.n} k={deck.k}")


def infer_regular_degree(n: int, deck: Deck) -> int | None:
    """Common degree k if the deck is consistent with a k-regular graph, else None."""
    _check_pre(n, deck)
    e = edge_count_from_deck(deck)
    if 2 * e % n:
        return None
    k = 2 * e // n
    for card in deck:
        if missing_edge_count(card, e) not in (2 * k - 1, 2 * k):
            return None
    return k


def classify_card(card: Card, k: int, e: int) -> CardClassification:
    missing = missing_edge_count(card, e)
    if missing not in (2 * k - 1, 2 * k):
        raise NotRegularConsistent(f"card misses {missing} edges, expected {2 * k - 1} or {2 * k}")
    rep = card.representative
    common = sum(1 for r in rep.rows if r.bit_count() == k - 2)
    return CardClassification(missing == 2 * k - 1, common)


def _common_counts(n: int, deck: Deck) -> tuple[int, set[int], set[int]] | None:
    k = infer_regular_degree(n, deck)
    if k is None:
        return None
    e = edge_count_from_deck(deck)
    adj, nonadj = set(), set()
    for card in deck:
        c = classify_card(card, k, e)
        (adj if c.omitted_adjacent else nonadj).add(c.common_count)
    return k, adj, nonadj


def recognize_srg(n: int, deck: Deck) -> SrgParams | None:
    got = _common_counts(n, deck)
    if got is None:
        return None
    k, adj, nonadj = got
    if len(adj) != 1 or len(nonadj) != 1:
        return None
    p = SrgParams(k, next(iter(adj)), next(iter(nonadj)))
    return p if p.mu >= 1 else None


def recognize_wdr(n: int, deck: Deck) -> WdrParams | None:
    """Like ``recognize_srg`` but nonadjacent cards with zero common
    neighbours (omitted pair at distance > 2) are allowed."""
    got = _common_counts(n, deck)
    if got is None:
        return None
    k, adj, nonadj = got
    positive = nonadj - {0}
    if len(adj) != 1 or len(positive) != 1:
        return None
    return WdrParams(k, next(iter(adj)), next(iter(positive)))


def is_complete(n: int, deck: Deck) -> bool:
    _check_pre(n, deck, min_n=4)
    full = comb(deck.k, 2)
    return all(c.edge_count == full for c in deck)


def recognize_clique_union(n: int, deck: Deck) -> list[int] | None:
    """Clique sizes when the graph is a regular disjoint union of cliques.

    A graph is a union of cliques iff no three vertices induce P3, which
    the 3-deck (derived from this deck) shows directly.
    """
    _check_pre(n, deck)
    small = subdeck(deck, 3)
    if _P3 in small.cards:
        return None
    k = infer_regular_degree(n, deck)
    if k is None:
        return None
    if n % (k + 1):
        raise InconsistentDeck(f"P3-free {k}-regular graph on {n} vertices is impossible")
    return [k + 1] * (n // (k + 1))
