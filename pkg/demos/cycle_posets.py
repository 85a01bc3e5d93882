"""
Two chains glued at both ends
=============================

A cycle poset joins a bottom and a top element by two strands with m and r
inner elements.  Long paths can only run along one strand, so the facet
complex of the path ideal becomes a tree once t passes the shorter strand.
"""

from __future__ import annotations

from pathideals import (build_cycle, facet_complex, height, is_cohen_macaulay,
                        is_sequentially_cm, is_simplicial_tree, path_ideal,
                        stanley_reisner_complex)
from pathideals.invariants import cycle_height_formula

# %% heights against the formula
for m, r in [(3, 3), (4, 2), (5, 3)]:
    P = build_cycle(m, r)
    row = [(height(path_ideal(P, t)), cycle_height_formula(m, r, t)) for t in range(2, 8)]
    print(f"C_{m},{r}", row)

# %% forest and CM status over a small grid
print(" m  r  t  tree  CM  seqCM")
for m, r in [(3, 3), (4, 2), (4, 3), (5, 2)]:
    P = build_cycle(m, r)
    for t in range(2, max(m, r) + 1):
        I = path_ideal(P, t)
        D = stanley_reisner_complex(I)
        print(f"{m:2d} {r:2d} {t:2d}  {is_simplicial_tree(facet_complex(I))!s:5s} "
              f"{is_cohen_macaulay(D)!s:5s} {is_sequentially_cm(D)}")
