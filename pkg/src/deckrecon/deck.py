"""Decks: isomorphism-aware multisets of induced subgraphs."""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb
from typing import Iterable, Iterator, Mapping, TextIO

from .canon import canonical_form, canonical_graph
from .errors import Graph6Error, GraphError, InconsistentDeck
from .graph import Graph, _induce
from .graph6 import parse_graph6, to_graph6


@dataclass(frozen=True)
class Card:
    code: bytes
    representative: Graph
    multiplicity: int

    @property
    def edge_count(self) -> int:
        return self.representative.edge_count


@dataclass(frozen=True)
class Deck:
    n: int
    k: int
    cards: Mapping[bytes, Card] = field(repr=False)

    def __post_init__(self) -> None:
        # store in canonical-code order so iteration is deterministic
        object.__setattr__(self, "cards", dict(sorted(self.cards.items())))

    def __iter__(self) -> Iterator[Card]:
        return iter(self.cards.values())

    def __len__(self) -> int:
        return len(self.cards)

    @property
    def total(self) -> int:
        return sum(c.multiplicity for c in self.cards.values())

    def counts(self) -> dict[bytes, int]:
        return {code: c.multiplicity for code, c in self.cards.items()}

    def multiplicity(self, g: Graph) -> int:
        card = self.cards.get(canonical_form(g))
        return card.multiplicity if card else 0


def _deck_chunk(g: Graph, k: int, start: int, stop: int) -> list[tuple[bytes, Graph, int]]:
    found: dict[bytes, list] = {}
    for subset in islice(combinations(range(g.n), k), start, stop):
        card = _induce(g.rows, subset)
        code = canonical_form(card)
        entry = found.get(code)
        if entry is None:
            found[code] = [card, 1]
        else:
            entry[1] += 1
    return [(code, rep, m) for code, (rep, m) in found.items()]


def compute_deck(g: Graph, k: int, workers: int = 1) -> Deck:
    """The k-deck of ``g``: every k-subset of vertices, counted by isomorphism type.

    Representatives are the first subset of each class in lexicographic
    order, which holds regardless of ``workers``.
    """
    if not 1 <= k <= g.n:
        raise GraphError(f"card size {k} outside 1..{g.n}")
    total = comb(g.n, k)
    if workers <= 1 or total < 256:
        parts = [_deck_chunk(g, k, 0, total)]
    else:
        step = -(-total // workers)
        bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_deck_chunk, *zip(*[(g, k, a, b) for a, b in bounds])))
    merged: dict[bytes, Card] = {}
    for part in parts:  # chunks are in subset order, so the first rep seen wins
        for code, rep, m in part:
            old = merged.get(code)
            merged[code] = Card(code, rep, m) if old is None else Card(code, old.representative, old.multiplicity + m)
    return Deck(g.n, k, merged)


def subdeck(deck: Deck, k_small: int) -> Deck:
    """Derive the smaller deck: every k_small-set lies in C(n-k_small, k-k_small) cards."""
    if not 1 <= k_small < deck.k:
        raise ValueError(f"subdeck size must be in 1..{deck.k - 1}, got {k_small}")
    raw: dict[bytes, list] = {}
    for card in deck:
        for sub in compute_deck(card.representative, k_small):
            entry = raw.setdefault(sub.code, [sub.representative, 0])
            entry[1] += sub.multiplicity * card.multiplicity
    div = comb(deck.n - k_small, deck.k - k_small)
    cards = {}
    for code, (rep, m) in raw.items():
        if m % div:
            raise InconsistentDeck(f"sub-card count {m} not divisible by {div}")
        cards[code] = Card(code, rep, m // div)
    return Deck(deck.n, k_small, cards)


def decks_equal(a: Deck, b: Deck) -> bool:
    return a.n == b.n and a.k == b.k and a.counts() == b.counts()


def deck_digest(deck: Deck) -> str:
    """Order-independent fingerprint: SHA-256 over sorted (code, multiplicity)."""
    h = hashlib.sha256(f"{deck.n}:{deck.k}".encode())
    for code, m in sorted(deck.counts().items()):
        h.update(len(code).to_bytes(2, "big") + code + m.to_bytes(8, "big"))
    return h.hexdigest()


def edge_count_from_deck(deck: Deck) -> int:
    """Edge count of the source graph of an (n-2)-deck.

    Each edge survives in the C(n-2, 2) cards that omit neither endpoint.
    """
    if deck.k != deck.n - 2 or deck.n < 4:
        raise ValueError("edge_count_from_deck needs an (n-2)-deck with n >= 4")
    total = sum(c.multiplicity * c.edge_count for c in deck)
    div = comb(deck.n - 2, 2)
    if total % div:
        raise InconsistentDeck(f"card edge total {total} not divisible by {div}")
    return total // div


def missing_edge_count(card: Card, e: int) -> int:
    missing = e - card.edge_count
    if missing < 0:
        raise InconsistentDeck(f"card has {card.edge_count} edges but the graph only {e}")
    return missing


def deck_from_cards(n: int, k: int, graphs: Iterable[tuple[Graph, int]]) -> Deck:
    """Assemble a deck from (labeled card, multiplicity) pairs; equal classes merge."""
    cards: dict[bytes, Card] = {}
    for g, m in graphs:
        if g.n != k:
            raise InconsistentDeck(f"card has {g.n} vertices, expected {k}")
        if m <= 0:
            raise InconsistentDeck(f"multiplicity must be positive, got {m}")
        code = canonical_form(g)
        old = cards.get(code)
        cards[code] = Card(code, g, m) if old is None else Card(code, old.representative, old.multiplicity + m)
    return Deck(n, k, cards)


# deck files ---------------------------------------------------------------

def format_deck(deck: Deck) -> str:
    """Deck file text. Each class is written in its canonical labeling, so
    equal decks give byte-identical files."""
    lines = [f"deck n={deck.n} k={deck.k}"]
    lines += [f"{to_graph6(canonical_graph(c.representative))}\t{c.multiplicity}" for c in deck]
    return "\n".join(lines) + "\n"


def write_deck(deck: Deck, stream: TextIO) -> None:
    stream.write(format_deck(deck))


def parse_deck(text: str) -> Deck:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise Graph6Error("empty deck file")
    head = lines[0].split()
    try:
        if len(head) != 3 or head[0] != "deck" or not head[1].startswith("n=") or not head[2].startswith("k="):
            raise ValueError
        n, k = int(head[1][2:]), int(head[2][2:])
    except ValueError:
        raise Graph6Error(f"bad deck header {lines[0]!r}") from None
    if not 1 <= k <= n:
        raise Graph6Error(f"bad deck header {lines[0]!r}")
    entries = []
    for ln in lines[1:]:
        parts = ln.split("\t")
        if len(parts) != 2:
            raise Graph6Error(f"bad deck line {ln!r}")
        g = parse_graph6(parts[0])
        try:
            m = int(parts[1])
        except ValueError:
            raise Graph6Error(f"bad multiplicity in {ln!r}") from None
        entries.append((g, m))
    return deck_from_cards(n, k, entries)


def read_deck(stream: TextIO) -> Deck:
    return parse_deck(stream.read())
