"""Path ideals and LD ideals of finite posets.

Builds the ideals from posets, computes graded Betti numbers by Hochster's
formula with exact ranks, and decides forest, Cohen-Macaulay and sequentially
Cohen-Macaulay properties by brute force.
"""

from __future__ import annotations

from .errors import (EmptyFamily, InconsistentIdeal, InvalidArgument, InvalidFamily,
                     InvalidParameter, InvalidPoset, InvalidSize, NotAFace,
                     PathIdealsError, UnsupportedInput)
from .poset import (LabeledEdge, Poset, build_antichain, build_chain, build_cycle,
                    build_diamond, build_grid, contains_pencil, dual, edge_poset,
                    is_forest_poset, is_graded, is_tree_poset, maximal_chains,
                    ordinal_sum, saturated_paths)
from .ideals import (PrimeComponent, SquarefreeMonomialIdeal, height, krull_dim_quotient,
                     ld_ideal, minimal_vertex_covers, path_ideal, primary_decomposition)
from .simplicial import (SimplicialComplex, boundary_matrix, facet_complex, join, link,
                         pure_skeleton, restriction, stanley_reisner_complex)
from .homology import GF2, GF32003, QQ, FieldSpec, HomologyProfile, homology_of_link, rank, reduced_homology
from .invariants import (BettiTable, PackingCertificate, betti_table_hochster,
                         betti_table_lcm, closed_form_chains, closed_form_diamond,
                         closed_form_grid_path, depth_quotient, is_cohen_macaulay, is_leaf,
                         is_sequentially_cm, is_simplicial_forest, is_simplicial_tree,
                         projective_dimension, reg_lower_bound, regularity)
from .families import (Choice, count_family, diamond_edge_subset, enumerate_tree_posets,
                       grid_edge_subset)
from .verify import THEOREM_IDS, VerifyReport, verify

__version__ = "0.1.0"
