from __future__ import annotations

from itertools import combinations

import pytest

from pathideals.errors import InvalidPoset, InvalidSize, UnsupportedInput
from pathideals.families import enumerate_tree_posets
from pathideals.ideals import ld_ideal, mask_of, path_ideal
from pathideals.poset import (Poset, build_antichain, build_chain, build_cycle,
                              build_diamond, build_grid, contains_pencil, dual,
                              edge_poset, find_pencil, induced_subposet, is_forest_poset,
                              is_graded, is_tree_poset, maximal_chains, ordinal_sum,
                              saturated_paths, disjoint_union)


def bowtie():
    return ordinal_sum(build_antichain(2), ordinal_sum(build_chain(1), build_antichain(2)))


# -- builders ------------------------------------------------------------------

def test_chain_covers():
    assert build_chain(3).sorted_covers() == [(0, 1), (1, 2)]
    assert build_chain(1).covers == frozenset()
    assert len(maximal_chains(build_chain(5))) == 1
    assert maximal_chains(build_chain(5))[0] == (0, 1, 2, 3, 4)


def test_chain_rejects_zero():
    with pytest.raises(InvalidSize):
        build_chain(0)


def test_cycle_3_2():
    C = build_cycle(3, 2)
    assert C.n == 3
    # a=0 bottom, b=1 top, middle element 2
    assert set(maximal_chains(C)) == {(0, 2, 1), (0, 1)}
    assert not is_graded(C)


def test_cycle_rejections():
    with pytest.raises(InvalidSize):
        build_cycle(2, 2)
    with pytest.raises(InvalidSize):
        build_cycle(1, 4)


def test_cycle_4_4_graded():
    C = build_cycle(4, 4)
    assert C.n == 6 and is_graded(C)
    assert len(maximal_chains(C)) == 2


@pytest.mark.parametrize("m,r", [(3, 2), (2, 5), (3, 4), (5, 5), (6, 3)])
def test_cycle_shape(m, r):
    C = build_cycle(m, r)
    assert C.n == m + r - 2
    assert sorted(len(c) for c in maximal_chains(C)) == sorted([m, r])
    assert is_graded(C) == (m == r)


def test_diamond_1_covers():
    P, lab = build_diamond(1)
    assert P.sorted_covers() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    by_label = {e.label: (e.tail, e.head) for e in lab}
    # a<b, b<d, a<c, c<d get labels 1..4 (0-based here)
    assert by_label == {0: (0, 1), 1: (1, 3), 2: (0, 2), 3: (2, 3)}


def test_diamond_sizes():
    P, lab = build_diamond(2)
    assert P.n == 7 and len(P.covers) == 8 and len(lab) == 8
    assert len(maximal_chains(P)) == 4
    assert len(maximal_chains(build_diamond(3)[0])) == 8


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_diamond_counts(n):
    P, _ = build_diamond(n)
    assert P.n == 3 * n + 1
    assert len(maximal_chains(P)) == 2 ** n
    assert is_graded(P)
    assert all(len(c) == 2 * n + 1 for c in maximal_chains(P))


def test_grid_2():
    P, lab = build_grid(2)
    assert P.n == 4 and len(P.covers) == 4
    assert sorted(e.name for e in lab) == sorted(["0^(0)", "0^(1)", "0^(c)", "1^(c)"])
    assert len(maximal_chains(P)) == 2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_grid_counts(n):
    P, lab = build_grid(n)
    assert P.n == 2 * n and len(P.covers) == 3 * n - 2
    chains = maximal_chains(P)
    assert len(chains) == n
    assert all(len(c) == n + 1 for c in chains)


def test_grid_is_product_order():
    # independent oracle: (i,s) <= (j,u) iff i <= j and s <= u
    n = 4
    P, _ = build_grid(n)
    elems = [(lvl, s) for s in range(n) for lvl in (0, 1)]
    for a, b in combinations(range(2 * n), 2):
        (i, s), (j, u) = elems[a], elems[b]
        assert P.leq(a, b) == (i <= j and s <= u)


# -- combinators ----------------------------------------------------------------

def test_ordinal_sum_chains():
    assert ordinal_sum(build_chain(2), build_chain(2)).covers == build_chain(4).covers


def test_ordinal_sum_antichains_no_pencil():
    Q = ordinal_sum(build_antichain(2), build_antichain(2))
    assert Q.n == 4 and len(Q.covers) == 4
    assert not contains_pencil(Q)


def test_diamond_2_as_ordinal_sum():
    D1, _ = build_diamond(1)
    top = D1.maximal_elements[0]
    tilde = induced_subposet(D1, [v for v in range(D1.n) if v != top])
    S = ordinal_sum(tilde, D1)
    D2, _ = build_diamond(2)
    # same shape: compare chain-length profile and cover counts
    assert S.n == D2.n and len(S.covers) == len(D2.covers)
    assert sorted(map(len, maximal_chains(S))) == sorted(map(len, maximal_chains(D2)))


def test_dual():
    L = build_chain(3)
    assert sorted(dual(L).covers) == [(1, 0), (2, 1)]
    P, _ = build_diamond(2)
    assert dual(dual(P)) == P


def test_dual_reverses_paths():
    P, _ = build_diamond(2)
    for t in range(2, 6):
        fwd = {tuple(reversed(p)) for p in saturated_paths(P, t)}
        assert fwd == set(saturated_paths(dual(P), t))
        assert path_ideal(dual(P), t).generators == path_ideal(P, t).generators


# -- paths and chains --------------------------------------------------------------

def test_saturated_paths_line():
    assert saturated_paths(build_chain(4), 2) == [(0, 1), (1, 2), (2, 3)]
    assert saturated_paths(build_chain(4), 5) == []
    assert len(saturated_paths(build_diamond(2)[0], 5)) == 4


def test_saturated_paths_sorted_and_saturated():
    P, _ = build_grid(4)
    for t in range(1, 6):
        paths = saturated_paths(P, t)
        assert paths == sorted(paths)
        for p in paths:
            assert all((a, b) in P.covers for a, b in zip(p, p[1:]))


def test_maximal_chain_counts():
    assert len(maximal_chains(build_chain(6))) == 1
    assert len(maximal_chains(build_cycle(5, 3))) == 2


def test_graded():
    assert is_graded(build_chain(4))
    assert not is_graded(build_cycle(3, 2))


# -- pencils and trees ------------------------------------------------------------

def test_pencils():
    assert not contains_pencil(build_chain(5))
    assert contains_pencil(bowtie())
    lo, z, hi = find_pencil(bowtie())
    assert z == 2


def test_diamond_pencils():
    assert not contains_pencil(build_diamond(1)[0])
    # from two diamonds on: b1,c1 < d1 < b2,c2
    for n in (2, 3):
        assert contains_pencil(build_diamond(n)[0])


def test_tree_posets():
    assert is_tree_poset(build_chain(4))
    assert not is_tree_poset(build_cycle(3, 3))
    assert not is_tree_poset(bowtie())
    two = disjoint_union(build_chain(2), build_chain(3))
    assert is_forest_poset(two) and not is_tree_poset(two)


def test_transitive_cover_rejected():
    with pytest.raises(InvalidPoset):
        Poset.from_covers(3, [(0, 1), (1, 2), (0, 2)])


def test_cycle_rejected():
    with pytest.raises(InvalidPoset):
        Poset.from_covers(2, [(0, 1), (1, 0)])


def test_out_of_range_cover():
    with pytest.raises(InvalidPoset):
        Poset.from_covers(2, [(0, 2)])


# -- tree corpus properties ---------------------------------------------------------

TREES = enumerate_tree_posets(6)


def test_tree_leaf_chain():
    # some maximal chain has its top or bottom on no other maximal chain
    for P in TREES:
        chains = maximal_chains(P)
        ok = False
        for c in chains:
            for end in (c[0], c[-1]):
                if sum(end in d for d in chains) == 1:
                    ok = True
        assert ok


def test_tree_path_intersections_are_paths():
    for P in TREES:
        for t in range(2, 5):
            paths = saturated_paths(P, t)
            for F, G in combinations(paths, 2):
                common = [v for v in F if v in G]
                if common:
                    # consecutive in F, hence a subpath
                    idx = [F.index(v) for v in common]
                    assert idx == list(range(idx[0], idx[0] + len(idx)))


# -- edge poset -----------------------------------------------------------------

def test_edge_poset_chain():
    E = edge_poset(build_chain(3))
    assert E.n == 2 and E.sorted_covers() == [(0, 1)]


def test_edge_poset_diamond_1():
    P, lab = build_diamond(1)
    E = edge_poset(P, lab)
    assert E.sorted_covers() == [(0, 1), (2, 3)]
    assert path_ideal(E, 2).generators == ld_ideal(P, lab).generators


@pytest.mark.parametrize("builder,arg", [(build_grid, 2), (build_grid, 3), (build_diamond, 2),
                                         (build_diamond, 3)])
def test_edge_poset_matches_ld(builder, arg):
    P, lab = builder(arg)
    r = len(maximal_chains(P)[0]) - 1
    E = edge_poset(P, lab)
    assert path_ideal(E, r).generators == ld_ideal(P, lab).generators


def test_edge_poset_strict_reading_differs():
    P, lab = build_diamond(1)
    E = edge_poset(P, lab, strict=True)
    # consecutive edges become incomparable under b < c
    assert E.covers == frozenset()
    assert path_ideal(E, 2).is_zero


def test_edge_poset_needs_graded():
    with pytest.raises(UnsupportedInput):
        edge_poset(build_cycle(3, 2))


def test_from_dict_round_trip():
    C = build_cycle(3, 2)
    assert Poset.from_dict(C.to_dict()) == C
    P, _ = build_grid(3)
    assert Poset.from_dict(P.to_dict()) == P


def test_masks_of_chains_distinct():
    P, _ = build_diamond(3)
    assert len({mask_of(c) for c in maximal_chains(P)}) == 8
