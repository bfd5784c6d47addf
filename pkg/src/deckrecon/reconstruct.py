"""Single-card reconstruction of regular graphs.

For an (n-2)-card omitting a nonadjacent pair {u, v}, vertices of degree
k-2 are the common neighbours M of u and v, and vertices of degree k-1
form the set S adjacent to exactly one of them. Each pair x, y in S is
labeled by comparing its in-card common-neighbour count to the count it
must have in the full graph: equal means the two attach to different
omitted vertices, one less means they attach to the same one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .deck import Deck, compute_deck, decks_equal, edge_count_from_deck
from .errors import (
    DeckMismatch,
    InconsistentCard,
    InconsistentDeck,
    Mu1Unsupported,
    NeedDistance2Card,
    NotACardOfRegular,
    NotANonadjacentCard,
    Unrecognized,
)
from .generators import clique_union, complete
from .graph import Graph, add_vertex, common_neighbors
from .params import SrgParams, WdrParams
from .recognize import (
    classify_card,
    infer_regular_degree,
    is_complete,
    recognize_clique_union,
    recognize_srg,
    recognize_wdr,
)


class PairLabel(enum.Enum):
    SAME = "same"
    DIFFERENT = "different"


class Branch(enum.Enum):
    COMPLETE = "complete"
    CLIQUE_UNION = "clique-union"
    SRG = "srg"
    WDR = "wdr"


@dataclass(frozen=True)
class ReconstructionReport:
    branch: Branch
    params: SrgParams | WdrParams | None = None
    card_code: bytes | None = None
    class_sizes: tuple[int, int] | None = None
    verified: bool = False


def reconstruct_regular_1card(k: int, card: Graph) -> Graph:
    """Kelly's method: the deleted vertex was adjacent to the degree-(k-1) vertices."""
    degs = [r.bit_count() for r in card.rows]
    low = [v for v, d in enumerate(degs) if d == k - 1]
    if len(low) != k or any(d not in (k - 1, k) for d in degs):
        raise NotACardOfRegular(f"card degrees {sorted(degs)} do not fit a vertex-deleted {k}-regular graph")
    return add_vertex(card, low)


def _pair_label(count: int, rho: int) -> PairLabel:
    if count == rho:
        return PairLabel.DIFFERENT
    if count == rho - 1:
        return PairLabel.SAME
    raise InconsistentCard(f"in-card common count {count}, expected {rho - 1} or {rho}")


def classify_pair_srg(card: Graph, params: SrgParams, x: int, y: int) -> PairLabel:
    rho = params.lam if card.adjacent(x, y) else params.mu
    return _pair_label(common_neighbors(card, x, y), rho)


def classify_pair_wdr(card: Graph, params: WdrParams, x: int, y: int) -> PairLabel:
    if params.mu_prime < 2:
        raise Mu1Unsupported(f"mu' = {params.mu_prime}; single-card reconstruction needs mu' >= 2")
    count = common_neighbors(card, x, y)
    if card.adjacent(x, y):
        return _pair_label(count, params.lam)
    if count:
        return _pair_label(count, params.mu_prime)
    # no common neighbour in the card: distance 3 in the full graph
    return PairLabel.DIFFERENT


def split_S(s: Sequence[int], labels: Mapping[frozenset, PairLabel]) -> tuple[set[int], set[int]]:
    """Two-colour S so SAME pairs share a side and DIFFERENT pairs cross.

    ``labels`` must cover every unordered pair of S. The side holding the
    smallest vertex comes first.
    """
    verts = sorted(s)
    if not verts:
        return set(), set()
    first = verts[0]
    a = {first} | {y for y in verts[1:] if labels[frozenset((first, y))] is PairLabel.SAME}
    for x, y in combinations(verts, 2):
        if ((x in a) != (y in a)) != (labels[frozenset((x, y))] is PairLabel.DIFFERENT):
            raise InconsistentCard(f"labels of ({x}, {y}) contradict every bipartition")
    return a, set(verts) - a


def _attach(card: Graph, common: list[int], a: set[int], b: set[int]) -> Graph:
    g = add_vertex(card, sorted(a) + common)
    return add_vertex(g, sorted(b) + common)


def _profile(card: Graph, k: int, n_common: int) -> tuple[list[int], list[int]]:
    degs = [r.bit_count() for r in card.rows]
    common = [v for v, d in enumerate(degs) if d == k - 2]
    s = [v for v, d in enumerate(degs) if d == k - 1]
    if len(common) != n_common or len(s) != 2 * k - 2 * n_common or any(d > k or d < k - 2 for d in degs):
        raise NotANonadjacentCard(
            f"card degrees {sorted(degs)} do not match a nonadjacent omitted pair with {n_common} common neighbours"
        )
    return common, s


def _labels(card, params, s, classify):
    return {frozenset((x, y)): classify(card, params, x, y) for x, y in combinations(s, 2)}


def reconstruct_srg(n: int, params: SrgParams, card: Graph, swap: bool = False) -> Graph:
    """Rebuild the graph from one card omitting a nonadjacent pair.

    ``swap`` exchanges which class goes to which omitted vertex; both
    choices give isomorphic graphs.
    """
    if card.n != n - 2:
        raise NotANonadjacentCard(f"card has {card.n} vertices, expected {n - 2}")
    common, s = _profile(card, params.k, params.mu)
    a, b = split_S(s, _labels(card, params, s, classify_pair_srg))
    if swap:
        a, b = b, a
    return _attach(card, common, a, b)


def reconstruct_wdr(n: int, params: WdrParams, card: Graph) -> Graph:
    if params.mu_prime < 2:
        raise Mu1Unsupported(f"mu' = {params.mu_prime}; single-card reconstruction needs mu' >= 2")
    if card.n != n - 2:
        raise NotANonadjacentCard(f"card has {card.n} vertices, expected {n - 2}")
    k = params.k
    if not any(r.bit_count() == k - 2 for r in card.rows):
        _profile(card, k, 0)
        raise NeedDistance2Card("omitted pair has no common neighbour; choose a distance-2 card")
    common, s = _profile(card, k, params.mu_prime)
    a, b = split_S(s, _labels(card, params, s, classify_pair_wdr))
    return _attach(card, common, a, b)


def _class_sizes(g: Graph, common_count: int) -> tuple[int, int]:
    # read back off the two appended vertices
    return g.degree(g.n - 2) - common_count, g.degree(g.n - 1) - common_count


def reconstruct_from_deck(n: int, deck: Deck, workers: int = 1) -> tuple[Graph, ReconstructionReport]:
    """Recognize the class of the deck's graph, rebuild it, and verify the deck."""
    if n < 6:
        raise ValueError(f"need at least 6 vertices, got {n}")
    if deck.n != n or deck.k != n - 2:
        raise ValueError(f"expected an {n - 2}-deck of an {n}-vertex graph")
    if deck.total != comb(n, 2):
        raise InconsistentDeck(f"deck holds {deck.total} cards, expected {comb(n, 2)}")

    if is_complete(n, deck):
        g, report = complete(n), ReconstructionReport(Branch.COMPLETE)
    elif (sizes := recognize_clique_union(n, deck)) is not None:
        g, report = clique_union(sizes), ReconstructionReport(Branch.CLIQUE_UNION)
    elif (srg := recognize_srg(n, deck)) is not None:
        card = _pick_card(deck, srg.k)
        g = _in_pipeline(reconstruct_srg, n, srg, card.representative)
        report = ReconstructionReport(Branch.SRG, srg, card.code, _class_sizes(g, srg.mu))
    elif (wdr := recognize_wdr(n, deck)) is not None:
        if wdr.mu_prime < 2:
            raise Mu1Unsupported(f"weakly distance-regular {tuple(wdr)} with mu' = 1 is not supported")
        card = _pick_card(deck, wdr.k)
        g = _in_pipeline(reconstruct_wdr, n, wdr, card.representative)
        report = ReconstructionReport(Branch.WDR, wdr, card.code, _class_sizes(g, wdr.mu_prime))
    elif infer_regular_degree(n, deck) is None:
        raise Unrecognized("deck is not that of a regular graph")
    else:
        raise Unrecognized("regular, but neither strongly regular nor weakly distance-regular")

    if not decks_equal(compute_deck(g, n - 2, workers=workers), deck):
        raise DeckMismatch("reconstructed graph does not reproduce the input deck")
    return g, replace(report, verified=True)


def _in_pipeline(fn, n, params, card):
    # a card chosen by recognition that still fails the profile means a bad deck
    try:
        return fn(n, params, card)
    except (NotANonadjacentCard, NeedDistance2Card) as exc:
        raise InconsistentCard(str(exc)) from exc


def _pick_card(deck: Deck, k: int):
    """Smallest-code card whose omitted pair is nonadjacent with a common neighbour."""
    e = edge_count_from_deck(deck)
    for card in deck:  # deck iterates in canonical-code order
        c = classify_card(card, k, e)
        if not c.omitted_adjacent and c.common_count > 0:
            return card
    raise Unrecognized("deck has no card omitting a nonadjacent pair")
