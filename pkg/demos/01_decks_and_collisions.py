"""
Decks and deck collisions
=========================

A k-deck is the multiset of k-vertex induced subgraphs, each taken up to
isomorphism. Two non-isomorphic graphs can share a deck.
"""

from deckrecon import compute_deck, decks_equal, subdeck
from deckrecon import generators as gen
from deckrecon.graph6 import to_graph6

# C4 + K1 and the subdivided claw: different graphs, same 3-deck
c4k1 = gen.disjoint_union(gen.cycle(4), gen.complete(1))
claw = gen.subdivided_star()
d1, d2 = compute_deck(c4k1, 3), compute_deck(claw, 3)
print("same 3-deck:", decks_equal(d1, d2))
for card in d1:
    print(f"  {to_graph6(card.representative):4s} edges={card.edge_count} x{card.multiplicity}")

# the path/cycle family: P_2l and C_{l+1} + P_{l-1} agree on their l-decks
for l in range(2, 6):
    a, b = gen.collision_pair(l)
    print(f"l={l}: P{2 * l} vs C{l + 1}+P{l - 1}:", decks_equal(compute_deck(a, l), compute_deck(b, l)))

# a larger deck determines every smaller one
g = gen.petersen()
d8 = compute_deck(g, 8)
print("Petersen 8-deck ->", {c.edge_count: c.multiplicity for c in subdeck(d8, 2)}, "(edge count: multiplicity)")
