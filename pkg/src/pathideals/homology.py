"""Reduced simplicial homology over prime fields and the rationals.

Ranks are exact.  GF(2) columns are Python-int bit vectors reduced by XOR;
GF(p) columns are sparse dicts reduced with modular inverses; rational ranks
use fraction-free integer elimination, dividing each reduced vector by the gcd
of its entries so coefficients stay small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import InvalidParameter
from .simplicial import SimplicialComplex, boundary_columns, link
from .ideals import popcount

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field ``GF(p)`` or, with ``p = 0``, the rationals."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise InvalidParameter(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def name(self) -> str:
        return "qq" if self.p == 0 else f"gf{self.p}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("qq", "q", "rationals", "0"):
            return cls(0)
        if t.startswith("gf"):
            t = t[2:]
        try:
            return cls(int(t))
        except ValueError:
            raise InvalidParameter(f"unknown field {text!r}") from None

    def __str__(self):
        return self.name


GF2 = FieldSpec(2)
GF32003 = FieldSpec(DEFAULT_PRIME)
QQ = FieldSpec(0)


def _as_field(field_spec) -> FieldSpec:
    if field_spec is None:
        return GF32003
    if isinstance(field_spec, FieldSpec):
        return field_spec
    if isinstance(field_spec, int):
        return FieldSpec(field_spec)
    return FieldSpec.parse(str(field_spec))


# -- rank --------------------------------------------------------------------

def _rank_gf2(columns) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for col in columns:
        v = 0
        for k, x in col.items():
            if x & 1:
                v ^= 1 << k
        while v:
            low = v & -v
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                r += 1
                break
            v ^= piv
    return r


def _rank_modp(columns, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for col in columns:
        v = {k: x % p for k, x in col.items() if x % p}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], p - 2, p)
                pivots[lead] = {k: x * inv % p for k, x in v.items()}
                r += 1
                break
            c = v[lead]
            for k, x in piv.items():
                y = (v.get(k, 0) - c * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r


def _rank_qq(columns) -> int:
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for col in columns:
        v = {k: int(x) for k, x in col.items() if x}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = v
                r += 1
                break
            a, b = piv[lead], v[lead]
            # v <- a*v - b*piv, then strip the content
            new = {k: a * x for k, x in v.items()}
            for k, x in piv.items():
                y = new.get(k, 0) - b * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            g = 0
            for x in new.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                new = {k: x // g for k, x in new.items()}
            v = new
    return r


def _rank_columns(columns, field_spec: FieldSpec) -> int:
    if field_spec.p == 2:
        return _rank_gf2(columns)
    if field_spec.p == 0:
        return _rank_qq(columns)
    return _rank_modp(columns, field_spec.p)


def rank(M, field=None) -> int:
    """Exact rank of an integer matrix over ``field`` (default GF(32003))."""
    f = _as_field(field)
    A = np.asarray(M, dtype=object)
    if A.ndim != 2 or A.size == 0:
        return 0
    cols = [{i: int(x) for i, x in enumerate(A[:, j]) if x != 0} for j in range(A.shape[1])]
    return _rank_columns(cols, f)


# -- homology ----------------------------------------------------------------

@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers by degree; missing degrees are zero."""

    dims: dict = field(default_factory=dict)
    field: str = GF32003.name

    def __post_init__(self):
        object.__setattr__(self, "dims", {int(d): int(v) for d, v in sorted(self.dims.items()) if v})

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def __eq__(self, other):
        if isinstance(other, HomologyProfile):
            return self.dims == other.dims
        if isinstance(other, dict):
            return self.dims == {d: v for d, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.dims.items()))

    @property
    def is_zero(self) -> bool:
        return not self.dims

    def to_dict(self) -> dict:
        return {"dims": {str(d): v for d, v in self.dims.items()}, "field": self.field}

    @classmethod
    def from_dict(cls, data: dict) -> "HomologyProfile":
        return cls({int(d): v for d, v in data["dims"].items()}, data.get("field", GF32003.name))


def homology_from_faces(faces, field=None) -> dict[int, int]:
    """Reduced Betti numbers of the complex with the given (closed) face list.

    The list must contain every face, including the empty face 0.
    """
    f = _as_field(field)
    by_dim: dict[int, list[int]] = {}
    for face in faces:
        by_dim.setdefault(popcount(face) - 1, []).append(face)
    if not by_dim:
        return {}
    top = max(by_dim)
    for d in by_dim:
        # any fixed order gives the same ranks; integer order is cheapest
        by_dim[d].sort()
    ranks = {}
    for d in range(0, top + 1):
        hi, lo = by_dim.get(d, []), by_dim.get(d - 1, [])
        ranks[d] = _rank_columns(boundary_columns(hi, lo), f) if hi and lo else 0
    dims = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            dims[d] = h
    return dims


def reduced_homology(delta: SimplicialComplex, field=None) -> HomologyProfile:
    """Reduced homology; void complexes and cones give the zero profile."""
    f = _as_field(field)
    if delta.is_void or delta.cone_point() is not None:
        return HomologyProfile({}, f.name)
    return HomologyProfile(homology_from_faces(delta.faces, f), f.name)


def homology_of_link(delta: SimplicialComplex, F, field=None) -> HomologyProfile:
    return reduced_homology(link(delta, F), field)
