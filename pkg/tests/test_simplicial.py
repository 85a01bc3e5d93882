from __future__ import annotations

import numpy as np
import pytest

from pathideals.errors import EmptyFamily, InconsistentIdeal, InvalidParameter, NotAFace
from pathideals.families import diamond_edge_subset, Choice
from pathideals.homology import GF2, QQ, rank, reduced_homology
from pathideals.ideals import SquarefreeMonomialIdeal, ld_ideal, mask_of, path_ideal
from pathideals.poset import build_chain, build_diamond, build_grid, grid_edge_index
from pathideals.simplicial import (SimplicialComplex, boundary_matrix, facet_complex, join,
                                   link, minimal_nonfaces, pure_skeleton, restriction,
                                   stanley_reisner_complex, stanley_reisner_faces)
from pathideals.ideals import minimal_vertex_covers

S = SimplicialComplex


def square():
    # the 4-gon 0-2-1-3-0 (the LD complex of the single diamond)
    return S.from_facets(4, [[0, 2], [2, 1], [1, 3], [3, 0]])


def test_sr_triangle_boundary():
    D = stanley_reisner_complex(SquarefreeMonomialIdeal.from_sets(3, [[0, 1, 2]]))
    assert D.facet_sets() == [(0, 1), (0, 2), (1, 2)]


def test_sr_diamond_is_square():
    D = stanley_reisner_complex(ld_ideal(*build_diamond(1)))
    assert D == square()


def test_sr_single_variable():
    D = stanley_reisner_complex(SquarefreeMonomialIdeal.from_sets(2, [[0]]))
    assert D.facet_sets() == [(1,)]
    assert D.faces == frozenset({0, 0b10})


def test_sr_zero_and_unit():
    assert stanley_reisner_complex(SquarefreeMonomialIdeal(3, ())).facet_sets() == [(0, 1, 2)]
    with pytest.raises(InconsistentIdeal):
        stanley_reisner_complex(SquarefreeMonomialIdeal(3, (0,)))


def test_sr_faces_agree_with_facets():
    for I in (ld_ideal(*build_diamond(2)), ld_ideal(*build_grid(4)), path_ideal(build_chain(7), 3)):
        D = stanley_reisner_complex(I)
        assert set(stanley_reisner_faces(I)) == set(D.faces)
        assert len(D.facets) == len(minimal_vertex_covers(I.generators, I.n_vars))


def test_sr_round_trip():
    for I in (ld_ideal(*build_diamond(2)), ld_ideal(*build_grid(3)), path_ideal(build_chain(6), 2)):
        assert minimal_nonfaces(stanley_reisner_complex(I)).generators == I.generators


def test_restriction():
    R = restriction(square(), [0, 1])
    assert R.facet_sets() == [(0,), (1,)]
    assert restriction(square(), [0, 1, 2, 3]) == square()


def test_restriction_type_one_is_sphere_boundary():
    n = 2
    D = stanley_reisner_complex(ld_ideal(*build_diamond(n)))
    w = diamond_edge_subset(n, [Choice.FIRST, Choice.FIRST])
    R = restriction(D, w)
    assert R == SimplicialComplex.simplex_boundary(w, D.n_vertices)


def test_link():
    bd = S.simplex_boundary([0, 1, 2, 3])
    assert link(bd, [0]) == S.simplex_boundary([1, 2, 3], 4)
    assert link(square(), 0) == square()
    with pytest.raises(NotAFace):
        link(square(), [0, 1])


def test_link_in_grid_block_is_join():
    # L(2) is the whole grid for n = 2; its link at 0^(c) is two points
    n = 2
    P, lab = build_grid(n)
    D = stanley_reisner_complex(ld_ideal(P, lab))
    g = lambda kind, s: grid_edge_index(n, kind, s)
    lk = link(D, 1 << g("c", 0))
    top = S.simplex_boundary([g("1", 0)], D.n_vertices)
    bottom = S.simplex_boundary([g("0", 0), g("c", 1)], D.n_vertices)
    joined = S(D.n_vertices, tuple(a | b for a in top.facets for b in bottom.facets))
    assert lk == joined


def test_join():
    pt = S.simplex([0])
    cone = join(pt, square())
    assert cone.cone_point() == 0
    s0 = S.from_facets(2, [[0], [1]])
    assert join(s0, s0) == S.from_facets(4, [[0, 2], [0, 3], [1, 2], [1, 3]])
    tri = S.simplex_boundary([0, 1, 2])
    assert reduced_homology(join(tri, tri)).dims == {3: 1}


def test_pure_skeleton():
    D = S.from_facets(3, [[0, 1], [2]])
    assert pure_skeleton(D, 0).facet_sets() == [(0,), (1,), (2,)]
    assert pure_skeleton(D, 1).facet_sets() == [(0, 1)]
    assert pure_skeleton(square(), 1) == square()
    with pytest.raises(InvalidParameter):
        pure_skeleton(square(), 2)


def test_boundary_ranks():
    assert rank(boundary_matrix(square(), 1)) == 3
    assert rank(boundary_matrix(square(), 1, GF2), GF2) == 3
    pts = S.from_facets(3, [[0], [1], [2]])
    assert rank(boundary_matrix(pts, 0)) == 1
    bd3 = S.simplex_boundary([0, 1, 2, 3])
    assert rank(boundary_matrix(bd3, 2), QQ) == 3


def test_boundary_squares_to_zero():
    D = stanley_reisner_complex(ld_ideal(*build_diamond(2)))
    for d in range(1, D.dim + 1):
        prod = boundary_matrix(D, d - 1).astype(np.int64) @ boundary_matrix(D, d).astype(np.int64)
        assert not prod.any()


def test_facet_complex():
    I = SquarefreeMonomialIdeal.from_sets(3, [[0, 1], [1, 2]])
    assert facet_complex(I).facet_sets() == [(0, 1), (1, 2)]
    F = facet_complex(path_ideal(build_chain(5), 3))
    assert len(F.facets) == 3 and all(len(f) == 3 for f in F.facet_sets())
    assert facet_complex(ld_ideal(*build_diamond(1))).facet_sets() == [(0, 1), (2, 3)]
    with pytest.raises(EmptyFamily):
        facet_complex(SquarefreeMonomialIdeal(3, ()))


def test_void_and_empty():
    assert S.void(3).is_void and S.void(3).dim == -2
    assert S.empty(3).dim == -1
    assert S.empty(3).faces == frozenset({0})
    assert restriction(square(), []) == S.empty(4)


def test_face_enumeration_order():
    enum = square().face_enumeration()
    assert enum[-1] == [0]
    assert enum[0] == [1, 2, 4, 8]
    assert enum[1] == [mask_of(f) for f in [(0, 2), (0, 3), (1, 2), (1, 3)]]


def test_dict_round_trip():
    for D in (square(), S.void(2), S.empty(3)):
        assert S.from_dict(D.to_dict()) == D
