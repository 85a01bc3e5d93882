"""Squarefree monomial ideals, path and LD ideals, and their minimal primes.

Monomials are stored as bitmasks over the variables ``0 .. n_vars-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyFamily, InconsistentIdeal, InvalidParameter
from .poset import (EdgeLabeling, Poset, check_edge_labeling, default_edge_labeling,
                    maximal_chains, saturated_paths)


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_key(mask: int):
    """Sort key: size first, then lexicographic on the sorted index tuple."""
    return popcount(mask), indices_of(mask)


def minimalize(masks) -> list[int]:
    """Inclusion-minimal members of a family of sets, canonically sorted."""
    out: list[int] = []
    for m in sorted(set(masks), key=popcount):
        if not any(g & m == g for g in out):
            out.append(m)
    return sorted(out, key=mask_key)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    n_vars: int
    generators: tuple[int, ...]
    var_names: tuple[str, ...] | None = None

    def __post_init__(self):
        gens = minimalize(self.generators)
        if any(g >> self.n_vars for g in gens):
            raise InvalidParameter("generator uses a variable outside the ring")
        object.__setattr__(self, "generators", tuple(gens))
        if self.var_names is not None:
            object.__setattr__(self, "var_names", tuple(self.var_names))

    @classmethod
    def from_sets(cls, n_vars, sets, var_names=None):
        return cls(n_vars, tuple(mask_of(s) for s in sets), var_names)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return 0 in self.generators

    def generator_sets(self) -> list[tuple[int, ...]]:
        return [indices_of(g) for g in self.generators]

    def names(self) -> tuple[str, ...]:
        return self.var_names or tuple(f"x{i + 1}" for i in range(self.n_vars))

    def monomial_strings(self) -> list[str]:
        names = self.names()
        return ["*".join(names[i] for i in indices_of(g)) or "1" for g in self.generators]

    def __contains__(self, monomial) -> bool:
        m = monomial if isinstance(monomial, int) else mask_of(monomial)
        return any(g & m == g for g in self.generators)

    def to_dict(self) -> dict:
        out = {"n_vars": self.n_vars, "generators": [list(s) for s in self.generator_sets()]}
        if self.var_names is not None:
            out["var_names"] = list(self.var_names)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "SquarefreeMonomialIdeal":
        return cls.from_sets(int(data["n_vars"]), data["generators"], data.get("var_names"))


@dataclass(frozen=True, order=True)
class PrimeComponent:
    """The prime generated by the variables in ``variables``."""

    variables: tuple[int, ...]

    @property
    def mask(self) -> int:
        return mask_of(self.variables)


def path_ideal(P: Poset, t: int) -> SquarefreeMonomialIdeal:
    if t < 2:
        raise InvalidParameter(f"path ideals need t >= 2, got {t}")
    return SquarefreeMonomialIdeal(
        P.n, tuple(mask_of(p) for p in saturated_paths(P, t)), P.labels)


def ld_ideal(P: Poset, labeling: EdgeLabeling | None = None) -> SquarefreeMonomialIdeal:
    """Ideal in the edge variables generated by the edge sets of maximal chains."""
    if labeling is None:
        labeling = default_edge_labeling(P)
    check_edge_labeling(P, labeling)
    var = {(e.tail, e.head): e.label for e in labeling}
    names = [""] * len(labeling)
    for e in labeling:
        names[e.label] = e.name or f"y{e.label + 1}"
    gens = []
    for chain in maximal_chains(P):
        if len(chain) < 2:
            raise InconsistentIdeal("an isolated element is a maximal chain with no edges")
        gens.append(mask_of(var[a, b] for a, b in zip(chain, chain[1:])))
    return SquarefreeMonomialIdeal(len(labeling), tuple(gens), tuple(names))


def chain_edge_sets(P: Poset, labeling: EdgeLabeling | None = None) -> list[int]:
    """Edge-variable masks of the maximal chains, without minimalization."""
    if labeling is None:
        labeling = default_edge_labeling(P)
    var = {(e.tail, e.head): e.label for e in labeling}
    return [mask_of(var[a, b] for a, b in zip(c, c[1:])) for c in maximal_chains(P)]


def minimal_vertex_covers(family, n_vars: int | None = None) -> list[PrimeComponent]:
    """All inclusion-minimal transversals of a family of nonempty sets.

    Depth-first branching on the smallest uncovered set.  Branch ``k`` takes its
    ``k``-th element and forbids the earlier ones, so every minimal transversal
    is reached on exactly one branch.  A branch dies as soon as a chosen vertex
    has lost all its private edges, since adding vertices never restores one.
    """
    edges = minimalize(m if isinstance(m, int) else mask_of(m) for m in family)
    if not edges:
        raise EmptyFamily("transversals of an empty family are not defined here")
    if 0 in edges:
        raise InconsistentIdeal("the family contains the empty set")
    found: list[int] = []

    def has_private(v_bit, chosen):
        for e in edges:
            if e & chosen == v_bit:
                return True
        return False

    def search(chosen, forbidden):
        uncovered = [e for e in edges if not e & chosen]
        if not uncovered:
            found.append(chosen)
            return
        e = min(uncovered, key=lambda x: popcount(x & ~forbidden))
        options = e & ~forbidden
        if not options:
            return
        blocked = forbidden
        for v in indices_of(options):
            bit = 1 << v
            new = chosen | bit
            if all(has_private(1 << u, new) for u in indices_of(new)):
                search(new, blocked)
            blocked |= bit

    search(0, 0)
    return [PrimeComponent(indices_of(m)) for m in sorted(found, key=mask_key)]


def primary_decomposition(I: SquarefreeMonomialIdeal) -> list[PrimeComponent]:
    if I.is_zero:
        raise EmptyFamily("the zero ideal has no minimal primes to list")
    return minimal_vertex_covers(I.generators, I.n_vars)


def height(I: SquarefreeMonomialIdeal) -> int:
    """Smallest minimal-prime size; 0 for the zero ideal."""
    if I.is_zero:
        return 0
    return min(len(c.variables) for c in primary_decomposition(I))


def krull_dim_quotient(I: SquarefreeMonomialIdeal) -> int:
    return I.n_vars - height(I)


def intersect_ideals(first: SquarefreeMonomialIdeal,
                     second: SquarefreeMonomialIdeal) -> SquarefreeMonomialIdeal:
    """Intersection of squarefree monomial ideals via pairwise lcms."""
    n = max(first.n_vars, second.n_vars)
    return SquarefreeMonomialIdeal(n, tuple(g | h for g in first.generators for h in second.generators))


def prime_ideal(n_vars: int, component: PrimeComponent) -> SquarefreeMonomialIdeal:
    return SquarefreeMonomialIdeal(n_vars, tuple(1 << v for v in component.variables))
