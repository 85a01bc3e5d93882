"""
Where the grid's Betti numbers come from
========================================

The product of a 2-chain and an n-chain has n maximal chains, one for each
rung ("connector") it crosses.  Only a few edge subsets W carry homology in
the restricted Stanley-Reisner complex; each is fixed by its connectors.
"""

from __future__ import annotations

from collections import Counter

from pathideals import (betti_table_hochster, build_grid, closed_form_chains, ld_ideal,
                        reduced_homology, restriction, stanley_reisner_complex)
from pathideals.families import count_family, grid_family_member, grid_labels, mask_names

n = 4
P, labels = build_grid(n)
I = ld_ideal(P, labels)
D = stanley_reisner_complex(I)
names = grid_labels(n)

# %% scan every subset and keep the ones with nonzero reduced homology
hits = Counter()
for w in range(1, 1 << I.n_vars):
    h = reduced_homology(restriction(D, w))
    if h.is_zero:
        continue
    s, t, connectors = grid_family_member(n, w, min_connectors=1)
    hits[s, t] += 1
    if t == 2 * n + 1:
        print(connectors, mask_names(w, names), h.dims)

# %% each (s, t) cell counts subsets; compare with the closed count
for (s, t), k in sorted(hits.items()):
    print(f"s={s} t={t}: {k} subsets, formula {count_family(s, t, n) if s > 1 else '-'}")

# %% summing the cells by s gives the Betti table
B = betti_table_hochster(I)
print(B.format())
print("matches closed form:", B == closed_form_chains(n))
