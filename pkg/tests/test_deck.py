import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deckrecon import generators as gen
from deckrecon.canon import canonical_form, is_isomorphic
from deckrecon.deck import (
    Card,
    compute_deck,
    deck_digest,
    deck_from_cards,
    decks_equal,
    edge_count_from_deck,
    format_deck,
    missing_edge_count,
    parse_deck,
    subdeck,
)
from deckrecon.errors import GraphError, InconsistentDeck
from deckrecon.graph import from_edges, induced_subgraph, relabel

from conftest import graphs, random_graph

C4K1 = gen.disjoint_union(gen.cycle(4), gen.complete(1))
K0 = from_edges(3, [])
K2K1 = from_edges(3, [(0, 1)])


def _nx_deck_profile(g, k):
    """Brute-force deck via networkx isomorphism: sorted multiplicities of
    classes found by pairwise comparison."""
    nx = pytest.importorskip("networkx")
    classes = []
    for sub in combinations(range(g.n), k):
        h = nx.Graph()
        h.add_nodes_from(range(k))
        h.add_edges_from(induced_subgraph(g, sub).edges())
        for entry in classes:
            if nx.is_isomorphic(entry[0], h):
                entry[1] += 1
                break
        else:
            classes.append([h, 1])
    return sorted(m for _, m in classes)


def test_k5_three_deck():
    d = compute_deck(gen.complete(5), 3)
    assert len(d) == 1
    assert d.multiplicity(gen.complete(3)) == 10


def test_c4k1_three_deck_multiset():
    # frozen from counting triples by edge count (3-vertex graphs are fixed by edge count)
    d = compute_deck(C4K1, 3)
    assert d.counts() == {
        canonical_form(gen.path(3)): 4,
        canonical_form(K2K1): 4,
        canonical_form(K0): 2,
    }
    assert decks_equal(d, compute_deck(gen.subdivided_star(), 3))


def test_petersen_eight_deck_total():
    d = compute_deck(gen.petersen(), 8)
    assert d.total == 45
    assert all(c.representative.n == 8 for c in d)
    assert all(canonical_form(c.representative) == c.code for c in d)


def test_representative_is_first_subset():
    g = gen.path(5)
    d = compute_deck(g, 3)
    first = {}
    for sub in combinations(range(5), 3):
        first.setdefault(canonical_form(induced_subgraph(g, sub)), induced_subgraph(g, sub))
    assert {c.code: c.representative for c in d} == first


def test_compute_deck_range():
    with pytest.raises(GraphError):
        compute_deck(gen.cycle(4), 0)
    with pytest.raises(GraphError):
        compute_deck(gen.cycle(4), 5)


def test_matches_networkx_bruteforce(rng):
    for _ in range(15):
        g = random_graph(rng, 6)
        for k in (3, 4):
            assert sorted(c.multiplicity for c in compute_deck(g, k)) == _nx_deck_profile(g, k)


def test_parallel_workers_same_result():
    g = gen.paley(13)
    serial = compute_deck(g, 6)
    par = compute_deck(g, 6, workers=3)
    assert decks_equal(serial, par)
    assert format_deck(serial) == format_deck(par)


def test_subdeck_examples():
    assert subdeck(compute_deck(gen.complete(4), 3), 1).counts() == {canonical_form(gen.complete(1)): 4}
    d2 = subdeck(compute_deck(gen.petersen(), 8), 2)
    assert d2.counts() == {canonical_form(gen.complete(2)): 15, canonical_form(from_edges(2, [])): 30}


def test_subdeck_fifty_random_six_vertex(rng):
    for _ in range(50):
        g = random_graph(rng, 6)
        assert decks_equal(subdeck(compute_deck(g, 4), 2), compute_deck(g, 2))


def test_subdeck_rejects_bad_sizes_and_fake_decks():
    d = compute_deck(gen.cycle(5), 3)
    with pytest.raises(ValueError):
        subdeck(d, 3)
    fake = deck_from_cards(5, 3, [(gen.path(3), 1)])
    with pytest.raises(InconsistentDeck):
        subdeck(fake, 2)


def test_decks_equal_paper_pairs():
    assert decks_equal(compute_deck(C4K1, 3), compute_deck(gen.subdivided_star(), 3))
    p6, c4p2 = gen.collision_pair(3)
    assert decks_equal(compute_deck(p6, 3), compute_deck(c4p2, 3))
    g = gen.petersen()
    assert decks_equal(compute_deck(g, 7), compute_deck(g, 7))
    assert not decks_equal(compute_deck(g, 7), compute_deck(g, 8))


def test_edge_count_from_deck():
    assert edge_count_from_deck(compute_deck(gen.petersen(), 8)) == 15
    assert edge_count_from_deck(compute_deck(gen.complete(6), 4)) == 15
    assert edge_count_from_deck(compute_deck(gen.complete_multipartite([3, 3]), 4)) == 9
    with pytest.raises(ValueError):
        edge_count_from_deck(compute_deck(gen.complete(6), 3))
    fake = deck_from_cards(6, 4, [(gen.path(4), 1)])
    with pytest.raises(InconsistentDeck):
        edge_count_from_deck(fake)


def test_missing_edge_count():
    pet = gen.petersen()
    adj_card = Card(b"", induced_subgraph(pet, set(range(10)) - {0, 1}), 1)
    non_card = Card(b"", induced_subgraph(pet, set(range(10)) - {0, 2}), 1)
    assert missing_edge_count(adj_card, 15) == 5
    assert missing_edge_count(non_card, 15) == 6
    k6_card = compute_deck(gen.complete(6), 4)
    assert missing_edge_count(next(iter(k6_card)), 15) == 9
    with pytest.raises(InconsistentDeck):
        missing_edge_count(adj_card, 3)


def test_deck_file_format():
    d = compute_deck(gen.complete(3), 2)
    assert format_deck(d) == "deck n=3 k=2\nA_\t3\n"
    text = format_deck(compute_deck(gen.petersen(), 8))
    lines = text.splitlines()
    assert lines[0] == "deck n=10 k=8"
    back = parse_deck(text)
    assert decks_equal(back, compute_deck(gen.petersen(), 8))
    assert format_deck(back) == text


def test_deck_digest_order_independent():
    d = compute_deck(gen.hypercube(3), 5)
    shuffled = list(d)
    random.Random(1).shuffle(shuffled)
    rebuilt = deck_from_cards(d.n, d.k, [(c.representative, c.multiplicity) for c in shuffled])
    assert deck_digest(rebuilt) == deck_digest(d)
    assert deck_digest(d) != deck_digest(compute_deck(gen.cycle(8), 5))


# properties ---------------------------------------------------------------

GENERATED = [gen.petersen(), gen.cycle(7), gen.path(6), gen.complete(6),
             gen.complete_multipartite([3, 3]), gen.hypercube(3), gen.rook(3, 3), C4K1,
             gen.subdivided_star()]


@pytest.mark.parametrize("g", GENERATED)
def test_multiplicity_conservation(g):
    for k in range(1, g.n + 1):
        assert compute_deck(g, k).total == comb(g.n, k)


@pytest.mark.parametrize("g", [x for x in GENERATED if x.n >= 4])
def test_edge_count_recovered(g):
    assert edge_count_from_deck(compute_deck(g, g.n - 2)) == g.edge_count


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=3, max_n=8), st.data())
def test_subdeck_consistency(g, data):
    k = data.draw(st.integers(2, g.n))
    k_small = data.draw(st.integers(1, k - 1))
    assert decks_equal(subdeck(compute_deck(g, k), k_small), compute_deck(g, k_small))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.data(), st.randoms(use_true_random=False))
def test_deck_isomorphism_invariant(g, data, r):
    k = data.draw(st.integers(1, g.n))
    perm = list(range(g.n))
    r.shuffle(perm)
    assert decks_equal(compute_deck(g, k), compute_deck(relabel(g, perm), k))
