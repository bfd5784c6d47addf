"""
Reconstructing a strongly regular graph from one card
=====================================================

The (n-2)-deck reveals the degree k, and for every card whether its two
missing vertices were adjacent and how many neighbours they shared. Once
the parameters (k, lambda, mu) are known, a single card suffices.
"""

from deckrecon import compute_deck, is_isomorphic, reconstruct_from_deck, recognize_srg
from deckrecon import generators as gen

graphs = {
    "Petersen": gen.petersen(),
    "K_{3,3}": gen.complete_multipartite([3, 3]),
    "octahedron": gen.complete_multipartite([2, 2, 2]),
    "rook(3,3)": gen.rook(3, 3),
    "Paley(13)": gen.paley(13),
    "Paley(17)": gen.paley(17),
}

for name, g in graphs.items():
    deck = compute_deck(g, g.n - 2)
    params = recognize_srg(g.n, deck)
    h, report = reconstruct_from_deck(g.n, deck)
    print(f"{name:11s} n={g.n:2d} params={tuple(params)} split={report.class_sizes} "
          f"isomorphic={is_isomorphic(g, h)} verified={report.verified}")
