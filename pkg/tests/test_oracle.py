from itertools import combinations

import pytest

from deckrecon import generators as gen
from deckrecon.canon import canonical_form, is_isomorphic
from deckrecon.deck import compute_deck, decks_equal
from deckrecon.errors import OutOfOracleRange
from deckrecon.oracle import (
    CLASS_COUNTS,
    enumerate_graphs,
    find_collisions,
    find_deck_preimages,
    is_l_reconstructible,
    sweep_labeled,
)

C4K1 = gen.disjoint_union(gen.cycle(4), gen.complete(1))
STAR = gen.subdivided_star()


@pytest.mark.parametrize("n", range(1, 8))
def test_class_counts(n):
    reps = enumerate_graphs(n)
    assert len(reps) == CLASS_COUNTS[n - 1]
    codes = [canonical_form(g) for g in reps]
    assert codes == sorted(set(codes))


@pytest.mark.parametrize("n", range(1, 7))
def test_extension_matches_labeled_sweep(n):
    assert {canonical_form(g) for g in enumerate_graphs(n)} == sweep_labeled(n)


def test_sweep_workers_agree():
    assert sweep_labeled(5, workers=2) == sweep_labeled(5)


def test_range_errors():
    for call in (lambda: enumerate_graphs(8), lambda: enumerate_graphs(0),
                 lambda: is_l_reconstructible(gen.complete(8), 2),
                 lambda: find_collisions(8, 3),
                 lambda: find_deck_preimages(8, compute_deck(gen.complete(8), 6))):
        with pytest.raises(OutOfOracleRange):
            call()


def test_preimages():
    res = find_deck_preimages(5, compute_deck(C4K1, 3), 10)
    assert {canonical_form(C4K1), canonical_form(STAR)} <= set(res.preimages)
    assert not res.truncated
    k33 = gen.complete_multipartite([3, 3])
    assert find_deck_preimages(6, compute_deck(k33, 4), 10).preimages == [canonical_form(k33)]
    assert find_deck_preimages(6, compute_deck(gen.complete(6), 4), 10).preimages == [canonical_form(gen.complete(6))]


def test_preimages_truncate():
    res = find_deck_preimages(5, compute_deck(C4K1, 3), 1)
    assert res.truncated and len(res.preimages) == 1


def test_preimages_are_genuine():
    d = compute_deck(C4K1, 3)
    res = find_deck_preimages(5, d, 10)
    for g in res.graphs:
        assert decks_equal(compute_deck(g, 3), d)


def test_l_reconstructible():
    assert not is_l_reconstructible(C4K1, 2)
    assert is_l_reconstructible(gen.complete_multipartite([3, 3]), 2)
    assert not is_l_reconstructible(gen.path(6), 3)
    assert is_l_reconstructible(gen.clique_union([3, 3]), 2)
    with pytest.raises(ValueError):
        is_l_reconstructible(gen.path(6), 6)


def _group_codes(groups):
    return [{canonical_form(g) for g in grp} for grp in groups]


def test_collisions_paper_examples():
    assert {canonical_form(C4K1), canonical_form(STAR)} in _group_codes(find_collisions(5, 3))
    p6, c4p2 = gen.collision_pair(3)
    assert any({canonical_form(p6), canonical_form(c4p2)} <= grp for grp in _group_codes(find_collisions(6, 3)))


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4), (6, 4)])
def test_collision_groups_consistent(n, k):
    groups = find_collisions(n, k)
    for grp in groups:
        assert len(grp) >= 2
        for a, b in combinations(grp, 2):
            assert decks_equal(compute_deck(a, k), compute_deck(b, k))
            assert not is_isomorphic(a, b)


def test_three_vertex_two_deck_collisions():
    # the 2-deck only records the edge count, which separates all four 3-vertex graphs
    assert find_collisions(3, 2) == []


def test_one_reconstruction_holds_at_small_n():
    # Kelly-Ulam reconstruction conjecture verified for n = 3..7
    for n in range(3, 8):
        assert find_collisions(n, n - 1) == []
