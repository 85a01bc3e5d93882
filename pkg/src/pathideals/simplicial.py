"""Finite simplicial complexes stored by their facets.

Faces are bitmasks over the vertices ``0 .. n_vertices-1``.  The empty complex
``{∅}`` has the single facet ``0``; the void complex (no faces at all) has no
facets.  Facets are kept sorted by size and then lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InconsistentIdeal, InvalidParameter, NotAFace
from .ideals import (SquarefreeMonomialIdeal, indices_of, mask_key, mask_of,
                     minimal_vertex_covers, popcount)


def _maximal(masks) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(f & m == m for f in out):
            out.append(m)
    return sorted(out, key=mask_key)


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def face_sort_key(mask: int):
    return indices_of(mask)


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple[int, ...]

    def __post_init__(self):
        facets = _maximal(f if isinstance(f, int) else mask_of(f) for f in self.facets)
        if any(f >> self.n_vertices for f in facets):
            raise InvalidParameter("facet uses a vertex outside the vertex set")
        object.__setattr__(self, "facets", tuple(facets))

    @classmethod
    def from_facets(cls, n_vertices, facets):
        return cls(n_vertices, tuple(f if isinstance(f, int) else mask_of(f) for f in facets))

    @classmethod
    def void(cls, n_vertices=0):
        return cls(n_vertices, ())

    @classmethod
    def empty(cls, n_vertices=0):
        return cls(n_vertices, (0,))

    @classmethod
    def simplex(cls, vertices, n_vertices=None):
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        if n_vertices is None:
            n_vertices = mask.bit_length()
        return cls(n_vertices, (mask,))

    @classmethod
    def simplex_boundary(cls, vertices, n_vertices=None):
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        if n_vertices is None:
            n_vertices = mask.bit_length()
        return cls(n_vertices, tuple(mask & ~(1 << v) for v in indices_of(mask)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}`` and -2 for the void complex."""
        if self.is_void:
            return -2
        return max(popcount(f) for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    def face_enumeration(self) -> dict[int, list[int]]:
        """Faces grouped by dimension, each list in lexicographic order."""
        by_dim: dict[int, list[int]] = {}
        for f in self.faces:
            by_dim.setdefault(popcount(f) - 1, []).append(f)
        return {d: sorted(fs, key=face_sort_key) for d, fs in sorted(by_dim.items())}

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.face_enumeration().items()}

    def is_face(self, face) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(f & m == m for f in self.facets)

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    def cone_point(self) -> int | None:
        """A vertex lying in every facet, or None."""
        if self.is_void:
            return None
        common = self.facets[0]
        for f in self.facets[1:]:
            common &= f
        if not common:
            return None
        return (common & -common).bit_length() - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [indices_of(f) for f in self.facets]

    def to_dict(self) -> dict:
        return {"n_vertices": self.n_vertices,
                "facets": [list(s) for s in self.facet_sets()],
                "void": self.is_void}

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        if data.get("void"):
            return cls.void(int(data["n_vertices"]))
        return cls.from_facets(int(data["n_vertices"]), data["facets"])


def restriction(delta: SimplicialComplex, W) -> SimplicialComplex:
    w = W if isinstance(W, int) else mask_of(W)
    if w >> delta.n_vertices:
        raise InvalidParameter("restriction set is not inside the vertex set")
    if delta.is_void:
        return delta
    return SimplicialComplex(delta.n_vertices, tuple(f & w for f in delta.facets))


def link(delta: SimplicialComplex, F) -> SimplicialComplex:
    m = F if isinstance(F, int) else mask_of(F)
    if not delta.is_face(m):
        raise NotAFace(f"{indices_of(m)} is not a face")
    return SimplicialComplex(delta.n_vertices,
                             tuple(f & ~m for f in delta.facets if f & m == m))


def join(delta: SimplicialComplex, gamma: SimplicialComplex) -> SimplicialComplex:
    """Join with ``gamma``'s vertices shifted past ``delta``'s vertex range."""
    k = delta.n_vertices
    facets = tuple(f | (g << k) for f in delta.facets for g in gamma.facets)
    return SimplicialComplex(k + gamma.n_vertices, facets)


def pure_skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by all faces of dimension exactly ``i``."""
    if not -1 <= i <= delta.dim:
        raise InvalidParameter(f"skeleton dimension {i} outside -1..{delta.dim}")
    size = i + 1
    gens = set()
    for f in delta.facets:
        if popcount(f) >= size:
            gens.update(s for s in _subsets_of_size(f, size))
    return SimplicialComplex(delta.n_vertices, tuple(gens))


def _subsets_of_size(mask: int, size: int):
    from itertools import combinations
    for combo in combinations(indices_of(mask), size):
        yield mask_of(combo)


def stanley_reisner_complex(I: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Complex whose minimal non-faces are the generators of ``I``.

    Facets are the complements of the minimal vertex covers of the generators.
    """
    if I.is_unit:
        raise InconsistentIdeal("the unit ideal would give the void complex")
    full = (1 << I.n_vars) - 1
    if I.is_zero:
        return SimplicialComplex(I.n_vars, (full,))
    covers = minimal_vertex_covers(I.generators, I.n_vars)
    return SimplicialComplex(I.n_vars, tuple(full & ~c.mask for c in covers))


def stanley_reisner_faces(I: SquarefreeMonomialIdeal, within: int | None = None) -> list[int]:
    """All subsets of ``within`` containing no generator (direct enumeration)."""
    if within is None:
        within = (1 << I.n_vars) - 1
    gens = [g for g in I.generators if g & within == g]
    verts = indices_of(within)
    out = []

    def grow(face, start):
        out.append(face)
        for k in range(start, len(verts)):
            bigger = face | (1 << verts[k])
            if not any(g & bigger == g for g in gens):
                grow(bigger, k + 1)

    grow(0, 0)
    return out


def minimal_nonfaces(delta: SimplicialComplex) -> SquarefreeMonomialIdeal:
    """The Stanley-Reisner ideal: minimal subsets of the vertex set that are not faces."""
    if delta.is_void:
        return SquarefreeMonomialIdeal(delta.n_vertices, (0,))
    faces = delta.faces
    out = set()
    for f in faces:
        for v in range(delta.n_vertices):
            bit = 1 << v
            if f & bit:
                continue
            cand = f | bit
            if cand in faces:
                continue
            if all((cand & ~(1 << u)) in faces for u in indices_of(cand)):
                out.add(cand)
    return SquarefreeMonomialIdeal(delta.n_vertices, tuple(out))


def facet_complex(I: SquarefreeMonomialIdeal) -> SimplicialComplex:
    from .errors import EmptyFamily
    if I.is_zero:
        raise EmptyFamily("the zero ideal has no facet complex")
    return SimplicialComplex(I.n_vars, I.generators)


def boundary_columns(faces_hi: list[int], faces_lo: list[int]) -> list[dict[int, int]]:
    """Sparse columns of the boundary map from ``faces_hi`` to ``faces_lo``.

    Column ``k`` lists the signed coefficients of ``faces_hi[k]``'s facets;
    removing the ``j``-th smallest vertex carries sign ``(-1)**j``.
    """
    index = {f: r for r, f in enumerate(faces_lo)}
    cols = []
    for f in faces_hi:
        col = {}
        sign = 1
        rest = f
        while rest:
            low = rest & -rest
            col[index[f ^ low]] = sign
            sign = -sign
            rest ^= low
        cols.append(col)
    return cols


def boundary_matrix(delta: SimplicialComplex, d: int, field=None) -> np.ndarray:
    """Dense matrix of the boundary map from ``d``-faces to ``(d-1)``-faces.

    ``d = 0`` gives the augmentation onto the empty face.  Over a prime field
    the entries are reduced mod ``p``.
    """
    if d < 0:
        raise InvalidParameter("boundary maps start at d = 0")
    by_dim = delta.face_enumeration()
    hi, lo = by_dim.get(d, []), by_dim.get(d - 1, [])
    M = np.zeros((len(lo), len(hi)), dtype=np.int64)
    for k, col in enumerate(boundary_columns(hi, lo)):
        for r, v in col.items():
            M[r, k] = v
    if field is not None and field.p:
        M %= field.p
    return M
