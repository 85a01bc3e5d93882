"""
Path ideals of tree posets
==========================

Every tree poset without a pencil gives path ideals whose facet complexes
are simplicial forests, and whose quotients are sequentially Cohen-Macaulay.
We enumerate all such posets up to isomorphism and check both facts.
"""

from __future__ import annotations

import time
from collections import Counter

from pathideals import (enumerate_tree_posets, facet_complex, is_sequentially_cm,
                        is_simplicial_forest, path_ideal, stanley_reisner_complex)

t0 = time.perf_counter()
trees = enumerate_tree_posets(6)
print(len(trees), "posets,", dict(sorted(Counter(P.n for P in trees).items())),
      f"in {time.perf_counter() - t0:.2f}s")

# %% both properties on every poset and every t
bad = []
for P in trees:
    for t in range(2, 6):
        I = path_ideal(P, t)
        if I.is_zero:
            continue
        ok = is_simplicial_forest(facet_complex(I)) and is_sequentially_cm(stanley_reisner_complex(I))
        if not ok:
            bad.append((P, t))
print("counterexamples:", bad)

# %% one poset in detail: six elements, three of them maximal
P = next(Q for Q in trees if Q.n == 6 and len(Q.maximal_elements) == 3)
print(P.labels, sorted(P.covers))
print(path_ideal(P, 2).monomial_strings())
