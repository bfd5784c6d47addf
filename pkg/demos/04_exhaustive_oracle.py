"""
Brute force on small graphs
===========================

All graphs on up to seven vertices can be listed, so deck uniqueness can
be checked directly rather than argued.
"""

from deckrecon import generators as gen
from deckrecon.graph import is_connected
from deckrecon.graph6 import to_graph6
from deckrecon.oracle import enumerate_graphs, find_collisions, is_l_reconstructible

for n in range(1, 8):
    print(f"n={n}: {len(enumerate_graphs(n))} isomorphism classes")

# which 5- and 6-vertex graphs share an (n-2)-deck?
for n in (5, 6):
    groups = find_collisions(n, n - 2)
    print(f"n={n}: {len(groups)} groups share a common {n - 2}-deck")
    for grp in groups:
        print("   ", " ".join(to_graph6(g) for g in grp))

for n in (6, 7):
    for g in enumerate_graphs(n):
        p = gen.srg_params(g) or gen.wdr_params(g)
        if p and is_connected(g) and p[2] >= 2:
            print(f"n={n} {to_graph6(g)} {tuple(p)} 2-reconstructible={is_l_reconstructible(g, 2)}")
