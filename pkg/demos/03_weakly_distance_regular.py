"""
Weakly distance-regular graphs
==============================

Only adjacent pairs and pairs at distance 2 need constant common-neighbour
counts. Cubes are the standard example; cycles have mu' = 1, which the
single-card procedure cannot handle.
"""

from deckrecon import Mu1Unsupported, compute_deck, is_isomorphic, reconstruct_from_deck, recognize_wdr
from deckrecon import generators as gen

for d in (3, 4):
    q = gen.hypercube(d)
    deck = compute_deck(q, q.n - 2)
    h, report = reconstruct_from_deck(q.n, deck)
    print(f"Q{d}: {tuple(recognize_wdr(q.n, deck))} branch={report.branch.value} isomorphic={is_isomorphic(q, h)}")

for n in (6, 7):
    c = gen.cycle(n)
    deck = compute_deck(c, n - 2)
    try:
        reconstruct_from_deck(n, deck)
    except Mu1Unsupported as exc:
        print(f"C{n}: {tuple(recognize_wdr(n, deck))} -> {exc}")
