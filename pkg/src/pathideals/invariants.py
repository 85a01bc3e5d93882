"""Graded Betti numbers and the invariants derived from them.

``betti_table_hochster`` sums reduced homology of restrictions of the
Stanley-Reisner complex over all vertex subsets.  A restriction to ``W`` is a
cone (and contributes nothing) unless every vertex of ``W`` lies in a
generator contained in ``W``; those subsets are skipped before any matrix is
built.  ``betti_table_lcm`` is an independent route through the complexes of
generator subsets whose union misses part of ``W``.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import InvalidArgument, InvalidParameter
from .homology import FieldSpec, _as_field, homology_from_faces, reduced_homology
from .ideals import (SquarefreeMonomialIdeal, height, indices_of, mask_of, popcount)
from .poset import Poset, saturated_paths
from .simplicial import (SimplicialComplex, minimal_nonfaces, pure_skeleton,
                         stanley_reisner_faces, submasks)


@dataclass
class BettiTable:
    n_vars: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {(int(i), int(j)): int(v)
                        for (i, j), v in sorted(self.entries.items()) if v}

    def __getitem__(self, key) -> int:
        return self.entries.get(tuple(key), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n_vars == other.n_vars and self.entries == other.entries

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return out

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in self.entries.items() if a == i}

    def is_pure(self) -> bool:
        return all(len(self.row(i)) == 1 for i in self.totals())

    def to_dict(self) -> dict:
        return {"n_vars": self.n_vars,
                "entries": [[i, j, v] for (i, j), v in self.entries.items()]}

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        return cls(int(data["n_vars"]), {(i, j): v for i, j, v in data["entries"]})

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "beta"])
        for (i, j), v in self.entries.items():
            w.writerow([i, j, v])
        return buf.getvalue()

    def format(self) -> str:
        """Macaulay2-style table: rows are j - i, columns are i."""
        if not self.entries:
            return "(empty)"
        pd = max(i for i, _ in self.entries)
        reg = max(j - i for i, j in self.entries)
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = ["     " + "".join(str(i).rjust(width) for i in range(pd + 1))]
        for r in range(reg + 1):
            cells = [self.entries.get((i, i + r), 0) for i in range(pd + 1)]
            lines.append(f"{r:>3}: " + "".join(
                (str(c) if c else ".").rjust(width) for c in cells))
        return "\n".join(lines)


def _contributing_subsets(I: SquarefreeMonomialIdeal):
    """Nonempty ``W`` that are unions of generators, in increasing order."""
    unions = {0}
    for g in I.generators:
        unions |= {u | g for u in unions}
    unions.discard(0)
    return sorted(unions)


def _hochster_chunk(args):
    all_faces, subsets, p = args
    field_spec = FieldSpec(p)
    out = []
    for w in subsets:
        faces = [f for f in all_faces if f & ~w == 0]
        out.append((w, homology_from_faces(faces, field_spec)))
    return out


def betti_table_hochster(I: SquarefreeMonomialIdeal, field=None, threads: int = 1) -> BettiTable:
    """Graded Betti numbers of ``S/I`` by Hochster's formula.

    ``beta[i, |W|]`` collects ``dim H~_{|W|-i-1}`` of the restriction to ``W``.
    """
    f = _as_field(field)
    if I.is_unit:
        raise InvalidParameter("S/I is zero for the unit ideal")
    entries = {(0, 0): 1}
    if I.is_zero:
        return BettiTable(I.n_vars, entries)
    all_faces = stanley_reisner_faces(I)
    subsets = _contributing_subsets(I)
    if threads > 1 and len(subsets) > 1:
        chunks = [subsets[k::threads] for k in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = [r for part in pool.map(_hochster_chunk, [(all_faces, c, f.p) for c in chunks])
                       for r in part]
        results.sort()
    else:
        results = _hochster_chunk((all_faces, subsets, f.p))
    for w, dims in results:
        j = popcount(w)
        for degree, value in dims.items():
            i = j - degree - 1
            entries[i, j] = entries.get((i, j), 0) + value
    return BettiTable(I.n_vars, entries)


def betti_table_lcm(I: SquarefreeMonomialIdeal, field=None) -> BettiTable:
    """Graded Betti numbers of ``S/I`` through generator-subset complexes.

    For each union ``W`` of generators, take the complex on the generators
    inside ``W`` whose faces are the subsets with union strictly smaller than
    ``W``; its reduced homology in degree ``i - 2`` is ``beta[i, W]``.  The cost
    grows with the number of generators instead of the number of variables.
    """
    f = _as_field(field)
    entries = {(0, 0): 1}
    gens = I.generators
    for w in _contributing_subsets(I):
        inside = [g for g in gens if g & ~w == 0]
        k = len(inside)
        faces = []
        # subsets of the generators inside W with union != W, closed downward
        for sub in range(1 << k):
            u = 0
            for b in indices_of(sub):
                u |= inside[b]
            if u != w:
                faces.append(sub)
        dims = homology_from_faces(faces, f)
        j = popcount(w)
        for degree, value in dims.items():
            entries[degree + 2, j] = entries.get((degree + 2, j), 0) + value
    return BettiTable(I.n_vars, entries)


def projective_dimension(B: BettiTable) -> int:
    return max(i for i, _ in B.entries)


def regularity(B: BettiTable) -> int:
    return max(j - i for i, j in B.entries)


def depth_quotient(B: BettiTable) -> int:
    """Depth of ``S/I`` by Auslander-Buchsbaum."""
    return B.n_vars - projective_dimension(B)


# -- packing bound ------------------------------------------------------------

@dataclass(frozen=True)
class PackingCertificate:
    t: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    def check(self, P: Poset) -> bool:
        """Paths pairwise disjoint and the only ``t``-paths inside their union."""
        masks = [mask_of(p) for p in self.paths]
        union = 0
        for m in masks:
            if union & m:
                return False
            union |= m
        inside = {mask_of(p) for p in saturated_paths(P, self.t) if mask_of(p) & ~union == 0}
        return inside == set(masks)


def packing_number(P: Poset, t: int) -> PackingCertificate:
    """Largest set of disjoint ``t``-paths whose union holds no other ``t``-path."""
    if t < 2:
        raise InvalidParameter(f"t must be >= 2, got {t}")
    paths = saturated_paths(P, t)
    masks = [mask_of(p) for p in paths]
    best: list[int] = []

    def clean(union, chosen_count):
        return sum(1 for m in masks if m & ~union == 0) == chosen_count

    def search(start, chosen, union):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for k in range(start, len(masks)):
            m = masks[k]
            if m & union:
                continue
            new_union = union | m
            # an extra path inside the union never disappears, so prune here
            if not clean(new_union, len(chosen) + 1):
                continue
            # rough bound: remaining disjoint paths cannot exceed free elements / t
            free = P.n - popcount(new_union)
            if len(chosen) + 1 + free // t <= len(best):
                chosen.append(k)
                if len(chosen) > len(best):
                    best = list(chosen)
                chosen.pop()
                continue
            chosen.append(k)
            search(k + 1, chosen, new_union)
            chosen.pop()

    search(0, [], 0)
    cert = PackingCertificate(t, tuple(paths[k] for k in best))
    assert cert.check(P)
    return cert


def reg_lower_bound(P: Poset, t: int) -> tuple[int, PackingCertificate]:
    cert = packing_number(P, t)
    return cert.size * (t - 1), cert


# -- leaves and forests -------------------------------------------------------

def _is_leaf_in(facets: list[int], F: int) -> bool:
    others = [H for H in facets if H != F]
    if not others:
        return True
    for G in others:
        inter = F & G
        if all((F & H) & ~inter == 0 for H in others):
            return True
    return False


def is_leaf(delta: SimplicialComplex, F) -> bool:
    m = F if isinstance(F, int) else mask_of(F)
    if m not in delta.facets:
        raise InvalidArgument(f"{indices_of(m)} is not a facet")
    return _is_leaf_in(list(delta.facets), m)


def is_simplicial_forest(delta: SimplicialComplex) -> bool:
    """Every nonempty subfamily of facets has a leaf (checked exhaustively)."""
    facets = list(delta.facets)
    q = len(facets)
    if q <= 1:
        return True
    for sub in range(1, 1 << q):
        if sub & (sub - 1) == 0:
            continue
        family = [facets[k] for k in indices_of(sub)]
        if not any(_is_leaf_in(family, F) for F in family):
            return False
    return True


def is_connected(delta: SimplicialComplex) -> bool:
    facets = [f for f in delta.facets if f]
    if len(facets) <= 1:
        return True
    reach = facets[0]
    changed = True
    while changed:
        changed = False
        for f in facets:
            if f & reach and f & ~reach:
                reach |= f
                changed = True
    return all(f & ~reach == 0 for f in facets)


def is_simplicial_tree(delta: SimplicialComplex) -> bool:
    return is_connected(delta) and is_simplicial_forest(delta)


# -- Cohen-Macaulay tests -----------------------------------------------------

def _faces_of(facets) -> set[int]:
    out: set[int] = set()
    for g in facets:
        out.update(submasks(g))
    return out


def _is_cm_reisner(delta: SimplicialComplex, f: FieldSpec) -> bool:
    if not delta.is_pure():
        return False
    facets = delta.facets
    for F in delta.faces:
        # facets through F stay an antichain after removing F
        lk = [g & ~F for g in facets if g & F == F]
        common = lk[0]
        for g in lk[1:]:
            common &= g
        if common:
            continue
        d = popcount(lk[0]) - 1
        dims = homology_from_faces(_faces_of(lk), f)
        if any(deg < d for deg in dims):
            return False
    return True


def _is_cm_betti(delta: SimplicialComplex, f: FieldSpec) -> bool:
    I = minimal_nonfaces(delta)
    B = betti_table_hochster(I, f)
    return projective_dimension(B) == height(I)


def is_cohen_macaulay(delta: SimplicialComplex, field=None, method: str = "reisner") -> bool:
    """Cohen-Macaulayness of the Stanley-Reisner ring of ``delta``.

    ``method="reisner"`` checks that every link has homology only in its top
    degree; ``method="betti"`` compares projective dimension with height.
    """
    f = _as_field(field)
    if delta.is_void:
        raise InvalidArgument("the void complex has no Stanley-Reisner ring")
    if method == "reisner":
        return _is_cm_reisner(delta, f)
    if method == "betti":
        return _is_cm_betti(delta, f)
    raise InvalidParameter(f"unknown method {method!r}")


def is_sequentially_cm(delta: SimplicialComplex, field=None) -> bool:
    """Every pure skeleton is Cohen-Macaulay."""
    f = _as_field(field)
    if delta.is_void:
        raise InvalidArgument("the void complex has no Stanley-Reisner ring")
    return all(_is_cm_reisner(pure_skeleton(delta, i), f) for i in range(0, delta.dim + 1))


# -- closed forms ------------------------------------------------------------

def closed_form_diamond(n: int, path: bool = False) -> BettiTable:
    """Betti table of the LD ideal of the ``n``-th diamond poset, or of its
    maximal-length path ideal when ``path`` is set."""
    if n < 1:
        raise InvalidParameter(f"diamond formulas need n >= 1, got {n}")
    entries = {(0, 0): 1}
    for i in range(1, n + 2):
        j = i + 2 * n if path else 2 * i + 2 * n - 2
        entries[i, j] = comb(n, i - 1) * 2 ** (n - i + 1)
    return BettiTable(3 * n + 1 if path else 4 * n, entries)


def closed_form_chains(n: int) -> BettiTable:
    """Betti table of the LD ideal of the grid ``L_2 x L_n``."""
    if n < 2:
        raise InvalidParameter(f"grid formulas need n >= 2, got {n}")
    entries = {(0, 0): 1, (1, n): n}
    for i in range(2, n + 1):
        for j in range(n + 2 * i - 2, 2 * n + i - 1):
            entries[i, j] = (2 * n - j + i - 1) * comb(j - n - i, i - 2)
    return BettiTable(3 * n - 2, entries)


def closed_form_grid_path(n: int) -> BettiTable:
    """Betti table of the path ideal of maximal chains of ``L_2 x L_n``."""
    if n < 2:
        raise InvalidParameter(f"grid formulas need n >= 2, got {n}")
    return BettiTable(2 * n, {(0, 0): 1, (1, n + 1): n, (2, n + 2): n - 1})


def line_pd_formula(n: int, t: int) -> int:
    """Projective dimension of ``S/I_t(L_n)`` for ``2 <= t <= n``."""
    if not 2 <= t <= n:
        raise InvalidParameter("need 2 <= t <= n")
    d = n % (t + 1)
    if d == t:
        return (2 * n - (t - 1)) // (t + 1)
    return 2 * (n - d) // (t + 1)


def cycle_height_formula(m: int, r: int, t: int) -> int:
    if m % t == 0 and r % t == 0:
        return (m + r) // t - 1
    return m // t + r // t
