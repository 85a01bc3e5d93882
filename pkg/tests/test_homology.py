from __future__ import annotations

import numpy as np
import pytest

from pathideals.errors import InvalidParameter
from pathideals.families import block_connectors, grid_edge_subset
from pathideals.homology import (GF2, GF32003, QQ, FieldSpec, HomologyProfile,
                                 homology_of_link, rank, reduced_homology)
from pathideals.ideals import ld_ideal
from pathideals.poset import build_diamond, build_grid, grid_edge_index
from pathideals.simplicial import (SimplicialComplex, boundary_matrix, link, restriction,
                                   stanley_reisner_complex)

S = SimplicialComplex
FIELDS = [GF2, GF32003, QQ]


def test_rank_examples():
    assert rank(np.eye(3, dtype=int)) == 3
    assert rank(np.zeros((3, 4), dtype=int)) == 0
    sq = S.from_facets(4, [[0, 2], [1, 2], [1, 3], [0, 3]])
    for f in FIELDS:
        assert rank(boundary_matrix(sq, 1), f) == 3


def test_rank_field_dependence():
    # 2 is zero in GF(2)
    M = [[2]]
    assert rank(M, GF2) == 0
    assert rank(M, QQ) == 1
    assert rank(M, FieldSpec(3)) == 1


def test_rank_qq_matches_numpy():
    rng = np.random.default_rng(5)
    for _ in range(30):
        M = rng.integers(-2, 3, size=(6, 7))
        assert rank(M, QQ) == np.linalg.matrix_rank(M)


def test_field_spec():
    assert FieldSpec.parse("gf2") == GF2
    assert FieldSpec.parse("qq") == QQ
    assert GF32003.name == "gf32003"
    with pytest.raises(InvalidParameter):
        FieldSpec(4)
    with pytest.raises(InvalidParameter):
        FieldSpec.parse("reals")


@pytest.mark.parametrize("f", FIELDS)
def test_basic_profiles(f):
    assert reduced_homology(S.simplex_boundary([0, 1, 2]), f) == {1: 1}
    assert reduced_homology(S.empty(2), f) == {-1: 1}
    assert reduced_homology(S.void(2), f).is_zero
    assert reduced_homology(S.simplex([0, 1, 2]), f).is_zero
    two_points = S.from_facets(2, [[0], [1]])
    assert reduced_homology(two_points, f) == {0: 1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_diamond_ld_complex(n):
    D = stanley_reisner_complex(ld_ideal(*build_diamond(n)))
    profiles = {f.name: reduced_homology(D, f).dims for f in FIELDS}
    assert all(p == {3 * n - 2: 1} for p in profiles.values())


def grid_block_complex(n, blocks):
    P, lab = build_grid(n)
    D = stanley_reisner_complex(ld_ideal(P, lab))
    return restriction(D, grid_edge_subset(n, block_connectors(blocks)))


def test_grid_block_examples():
    assert reduced_homology(grid_block_complex(3, (2, 2))) == {3: 1}
    W = grid_block_complex(3, (3,))
    c0 = 1 << grid_edge_index(3, "c", 0)
    assert homology_of_link(W, c0) == {2: 1}


def test_link_homology_examples():
    bd = S.simplex_boundary([0, 1, 2, 3])
    assert homology_of_link(bd, [0]) == {1: 1}
    sq = S.from_facets(4, [[0, 2], [1, 2], [1, 3], [0, 3]])
    assert homology_of_link(sq, 0) == reduced_homology(sq)


def test_profile_serialization():
    h = HomologyProfile({-1: 0, 2: 3}, "qq")
    assert h.dims == {2: 3}
    assert h[5] == 0
    assert HomologyProfile.from_dict(h.to_dict()) == h
    assert h.to_dict() == {"dims": {"2": 3}, "field": "qq"}


def test_projective_plane_torsion():
    # 6-vertex RP^2: the only place the fields disagree
    facets = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
              [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]]
    D = S.from_facets(6, facets)
    assert reduced_homology(D, QQ).is_zero
    assert reduced_homology(D, GF2) == {1: 1, 2: 1}
