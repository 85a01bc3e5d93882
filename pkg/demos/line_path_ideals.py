"""
Path ideals of a line
=====================

On the chain 1 < 2 < ... < n the t-paths are the windows of t consecutive
elements.  Height, projective dimension and the Cohen-Macaulay property all
follow simple rules; here we tabulate them by brute force.
"""

from __future__ import annotations

from pathideals import (betti_table_hochster, build_chain, height, is_cohen_macaulay,
                        path_ideal, projective_dimension, reg_lower_bound, regularity,
                        stanley_reisner_complex)
from pathideals.invariants import line_pd_formula

# %% one row per (n, t)
print(" n  t  height  pd  formula  reg  bound  CM")
for n in range(2, 9):
    for t in range(2, n + 1):
        I = path_ideal(build_chain(n), t)
        B = betti_table_hochster(I)
        bound, _ = reg_lower_bound(build_chain(n), t)
        cm = is_cohen_macaulay(stanley_reisner_complex(I))
        print(f"{n:2d} {t:2d}  {height(I):6d} {projective_dimension(B):3d}"
              f"  {line_pd_formula(n, t):7d} {regularity(B):4d} {bound:6d}  {cm}")

# %% CM happens only at n = t and n = 2t
print(sorted((n, t) for n in range(2, 9) for t in range(2, n + 1)
             if is_cohen_macaulay(stanley_reisner_complex(path_ideal(build_chain(n), t)))))

# %% a packing certificate: disjoint paths no other path fits inside
bound, cert = reg_lower_bound(build_chain(11), 3)
print(bound, cert.paths, cert.check(build_chain(11)))
