"""
Betti tables of stacked diamonds
================================

Stack n diamonds and put one variable on every cover edge.  The ideal
generated by the edge products of the maximal chains has a resolution we can
read off from Hochster's formula, and it matches a closed form.
"""

from __future__ import annotations

from pathideals import (betti_table_hochster, build_diamond, closed_form_diamond, ld_ideal,
                        path_ideal)
from pathideals import depth_quotient, projective_dimension, regularity

# %% one diamond: two chains, a complete intersection
P, labels = build_diamond(1)
I = ld_ideal(P, labels)
print(I.monomial_strings())
print(betti_table_hochster(I).format())

# %% three diamonds: 8 chains in 12 variables
P, labels = build_diamond(3)
I = ld_ideal(P, labels)
B = betti_table_hochster(I, "gf32003")
print(B.format())
print("matches closed form:", B == closed_form_diamond(3))
print("pd", projective_dimension(B), "reg", regularity(B), "depth", depth_quotient(B))

# %% the path ideal of the longest paths has a pure table
for n in (1, 2, 3):
    J_table = betti_table_hochster(path_ideal(build_diamond(n)[0], 2 * n + 1))
    print(n, J_table.entries, "pure" if J_table.is_pure() else "not pure")
