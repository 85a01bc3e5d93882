"""Finite posets given by their cover relations.

Elements are indexed ``0 .. n-1``; ``labels`` are for display only.  A cover
``(a, b)`` means ``b`` covers ``a`` and is drawn as an edge pointing upward in
the Hasse diagram.  Paths are counted by vertices: a path of length ``t`` is a
saturated chain of ``t`` elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import InvalidSize, InvalidPoset, UnsupportedInput


@dataclass(frozen=True)
class LabeledEdge:
    """A cover ``tail < head`` carrying the edge variable ``label``."""

    tail: int
    head: int
    label: int
    name: str = ""


EdgeLabeling = tuple  # tuple[LabeledEdge, ...] ordered by label


@dataclass(frozen=True)
class Poset:
    labels: tuple[str, ...]
    covers: frozenset = field(default_factory=frozenset)
    # Permit covers implied by longer chains.  Only the cycle posets with a
    # 2-element chain need this; their diagram is a triangle-like cycle.
    allow_shortcuts: bool = False

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "covers", frozenset((int(a), int(b)) for a, b in self.covers))
        n = len(self.labels)
        if n == 0:
            raise InvalidSize("a poset needs at least one element")
        for a, b in self.covers:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidPoset(f"cover {(a, b)} references an element outside 0..{n - 1}")
            if a == b:
                raise InvalidPoset(f"self-cover at {a}")
        # order_above raises on cycles
        above = self.order_above
        if self.allow_shortcuts:
            return
        for a, b in self.covers:
            for c in _bits(above[a]):
                if c != b and (above[c] >> b) & 1:
                    raise InvalidPoset(
                        f"cover {(a, b)} is implied transitively through {c}")

    @classmethod
    def from_covers(cls, n, covers, labels=None, allow_shortcuts=False):
        if labels is None:
            labels = [f"x{i + 1}" for i in range(n)]
        return cls(tuple(labels), frozenset(covers), allow_shortcuts)

    def __len__(self):
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        up = [[] for _ in range(self.n)]
        for a, b in self.covers:
            up[a].append(b)
        return tuple(tuple(sorted(u)) for u in up)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        down = [[] for _ in range(self.n)]
        for a, b in self.covers:
            down[b].append(a)
        return tuple(tuple(sorted(d)) for d in down)

    @cached_property
    def order_above(self) -> tuple[int, ...]:
        """Bitmask of the elements strictly above each element."""
        n = self.n
        indeg = [len(d) for d in self.lower_covers]
        # Kahn order, then sweep from the top
        stack = [v for v in range(n) if indeg[v] == 0]
        topo = []
        while stack:
            v = stack.pop()
            topo.append(v)
            for w in self.upper_covers[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        if len(topo) != n:
            raise InvalidPoset("cover relation contains a directed cycle")
        above = [0] * n
        for v in reversed(topo):
            m = 0
            for w in self.upper_covers[v]:
                m |= (1 << w) | above[w]
            above[v] = m
        return tuple(above)

    @cached_property
    def order_below(self) -> tuple[int, ...]:
        below = [0] * self.n
        for v, m in enumerate(self.order_above):
            for w in _bits(m):
                below[w] |= 1 << v
        return tuple(below)

    def less(self, a: int, b: int) -> bool:
        return bool((self.order_above[a] >> b) & 1)

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @cached_property
    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.lower_covers[v])

    @cached_property
    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.upper_covers[v])

    def sorted_covers(self) -> list[tuple[int, int]]:
        return sorted(self.covers)

    def to_dict(self) -> dict:
        out = {
            "elements": list(self.labels),
            "covers": [[self.labels[a], self.labels[b]] for a, b in self.sorted_covers()],
        }
        if self.allow_shortcuts:
            out["allow_shortcuts"] = True
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        labels = [str(x) for x in data["elements"]]
        if len(set(labels)) != len(labels):
            raise InvalidPoset("duplicate element names")
        index = {name: i for i, name in enumerate(labels)}
        try:
            covers = [(index[str(a)], index[str(b)]) for a, b in data.get("covers", [])]
        except KeyError as exc:
            raise InvalidPoset(f"cover references unknown element {exc}") from None
        if len(set(covers)) != len(covers):
            raise InvalidPoset("duplicate cover")
        return cls(tuple(labels), frozenset(covers), bool(data.get("allow_shortcuts", False)))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def default_edge_labeling(P: Poset) -> EdgeLabeling:
    """Label covers in lexicographic (tail, head) order."""
    return tuple(
        LabeledEdge(a, b, k, f"y{k + 1}") for k, (a, b) in enumerate(P.sorted_covers()))


def check_edge_labeling(P: Poset, labeling: EdgeLabeling) -> None:
    pairs = [(e.tail, e.head) for e in labeling]
    if set(pairs) != P.covers or len(pairs) != len(P.covers):
        raise InvalidPoset("edge labeling does not match the covers")
    if sorted(e.label for e in labeling) != list(range(len(pairs))):
        raise InvalidPoset("edge labels must be a bijection onto 0..|covers|-1")


# -- constructors ------------------------------------------------------------

def build_chain(n: int) -> Poset:
    if n < 1:
        raise InvalidSize(f"chain needs n >= 1, got {n}")
    return Poset.from_covers(n, [(i, i + 1) for i in range(n - 1)])


def build_antichain(n: int) -> Poset:
    if n < 1:
        raise InvalidSize(f"antichain needs n >= 1, got {n}")
    return Poset.from_covers(n, [])


def build_cycle(m: int, r: int) -> Poset:
    """The cycle poset with maximal chains of ``m`` and ``r`` elements.

    Element 0 is the common minimum and element 1 the common maximum; the
    interior of the ``m``-chain comes next, then the interior of the
    ``r``-chain.  ``(2, 2)`` is rejected since it would need a doubled cover.
    When one chain has two elements its single edge is a shortcut across the
    other chain, so the result is built with ``allow_shortcuts``.
    """
    if m < 2 or r < 2:
        raise InvalidSize(f"cycle poset needs m, r >= 2, got {(m, r)}")
    if (m, r) == (2, 2):
        raise InvalidSize("C_{2,2} would need two parallel covers")
    n = m + r - 2
    bottom, top = 0, 1
    first = [bottom] + list(range(2, m)) + [top]
    second = [bottom] + list(range(m, n)) + [top]
    covers = set(zip(first, first[1:])) | set(zip(second, second[1:]))
    labels = (["a", "b"] + [f"u{i}" for i in range(2, m)] + [f"v{j}" for j in range(2, r)])
    return Poset(tuple(labels), frozenset(covers), min(m, r) == 2)


def cycle_chains(m: int, r: int) -> tuple[list[int], list[int]]:
    """Vertex sequences of the two maximal chains of ``build_cycle(m, r)``."""
    n = m + r - 2
    return [0] + list(range(2, m)) + [1], [0] + list(range(m, n)) + [1]


def build_diamond(n: int) -> tuple[Poset, EdgeLabeling]:
    """``n`` stacked diamonds with the standard edge labels.

    In diamond ``i`` (counted from the bottom, 1-based) with bottom ``a``, top
    ``d`` and sides ``b``, ``c``: ``a<b`` gets ``4(i-1)+1``, ``b<d`` gets
    ``4(i-1)+2``, ``a<c`` gets ``4(i-1)+3`` and ``c<d`` gets ``4i``.  Variable
    indices are these labels minus one.
    """
    if n < 1:
        raise InvalidSize(f"diamond poset needs n >= 1, got {n}")
    labels = ["x1"]
    covers = []
    edges = []
    bottom = 0
    for i in range(n):
        b, c, d = 3 * i + 1, 3 * i + 2, 3 * i + 3
        labels += [f"x{b + 1}", f"x{c + 1}", f"x{d + 1}"]
        for k, (u, v) in enumerate([(bottom, b), (b, d), (bottom, c), (c, d)]):
            covers.append((u, v))
            edges.append(LabeledEdge(u, v, 4 * i + k, f"y{4 * i + k + 1}"))
        bottom = d
    return Poset(tuple(labels), frozenset(covers)), tuple(edges)


def grid_element(level: int, s: int) -> int:
    """Index of the grid element ``(level, s)``."""
    return 2 * s + level


def build_grid(n: int) -> tuple[Poset, EdgeLabeling]:
    """The product ``L_2 x L_n`` with elements ``(0,s)``, ``(1,s)``.

    Edge variables: ``s^(0)`` is ``s``, ``s^(1)`` is ``(n-1)+s`` (both for
    ``0 <= s <= n-2``), and the connecting edge ``s^(c)`` is ``2(n-1)+s``.
    """
    if n < 2:
        raise InvalidSize(f"grid needs n >= 2, got {n}")
    labels = []
    for s in range(n):
        labels += [f"({0},{s})", f"({1},{s})"]
    edges = []
    for s in range(n - 1):
        edges.append(LabeledEdge(grid_element(0, s), grid_element(0, s + 1), s, f"{s}^(0)"))
    for s in range(n - 1):
        edges.append(LabeledEdge(grid_element(1, s), grid_element(1, s + 1), n - 1 + s, f"{s}^(1)"))
    for s in range(n):
        edges.append(LabeledEdge(grid_element(0, s), grid_element(1, s), 2 * (n - 1) + s, f"{s}^(c)"))
    covers = frozenset((e.tail, e.head) for e in edges)
    return Poset(tuple(labels), covers), tuple(edges)


def grid_edge_index(n: int, kind: str, s: int) -> int:
    """Variable index of edge ``s^(kind)`` in ``build_grid(n)``; kind is '0', '1' or 'c'."""
    if kind == "0":
        return s
    if kind == "1":
        return n - 1 + s
    if kind == "c":
        return 2 * (n - 1) + s
    raise ValueError(kind)


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    k = P.n
    covers = set(P.covers) | {(a + k, b + k) for a, b in Q.covers}
    return Poset(_unique_labels(P.labels, Q.labels), frozenset(covers),
                 P.allow_shortcuts or Q.allow_shortcuts)


def ordinal_sum(P: Poset, Q: Poset) -> Poset:
    """``P`` below ``Q``: every maximal element of ``P`` is covered by every minimal one of ``Q``."""
    k = P.n
    covers = set(P.covers) | {(a + k, b + k) for a, b in Q.covers}
    covers |= {(a, b + k) for a in P.maximal_elements for b in Q.minimal_elements}
    return Poset(_unique_labels(P.labels, Q.labels), frozenset(covers))


def _unique_labels(first, second):
    if set(first).isdisjoint(second):
        return tuple(first) + tuple(second)
    return tuple(f"p.{x}" for x in first) + tuple(f"q.{x}" for x in second)


def dual(P: Poset) -> Poset:
    return Poset(P.labels, frozenset((b, a) for a, b in P.covers), P.allow_shortcuts)


def induced_subposet(P: Poset, keep) -> Poset:
    """Subposet on ``keep`` with the induced order (covers recomputed)."""
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    covers = []
    for a, b in combinations(keep, 2):
        for lo, hi in ((a, b), (b, a)):
            if P.less(lo, hi) and not any(
                    P.less(lo, c) and P.less(c, hi) for c in keep if c not in (lo, hi)):
                covers.append((index[lo], index[hi]))
    return Poset(tuple(P.labels[v] for v in keep), frozenset(covers))


# -- chains ------------------------------------------------------------------

def saturated_paths(P: Poset, t: int) -> list[tuple[int, ...]]:
    """All saturated chains with exactly ``t`` elements, lexicographically sorted."""
    if t < 1:
        raise InvalidSize(f"path length must be >= 1, got {t}")
    out = []
    up = P.upper_covers

    def extend(path):
        if len(path) == t:
            out.append(tuple(path))
            return
        for w in up[path[-1]]:
            path.append(w)
            extend(path)
            path.pop()

    for v in range(P.n):
        extend([v])
    return out


def maximal_chains(P: Poset) -> list[tuple[int, ...]]:
    out = []
    up = P.upper_covers

    def extend(path):
        succ = up[path[-1]]
        if not succ:
            out.append(tuple(path))
            return
        for w in succ:
            path.append(w)
            extend(path)
            path.pop()

    for v in P.minimal_elements:
        extend([v])
    return sorted(out)


def is_graded(P: Poset) -> bool:
    return len({len(c) for c in maximal_chains(P)}) == 1


def rank(P: Poset) -> int:
    """Number of covers in a longest chain."""
    return max(len(c) for c in maximal_chains(P)) - 1


def _has_incomparable_pair(P: Poset, mask: int) -> bool:
    elems = list(_bits(mask))
    return any(not P.comparable(a, b) for a, b in combinations(elems, 2))


def find_pencil(P: Poset):
    """Return ``(lower pair, z, upper pair)`` of some pencil in ``P``, or None."""
    for z in range(P.n):
        below = [v for v in _bits(P.order_below[z])]
        above = [v for v in _bits(P.order_above[z])]
        lo = next(((a, b) for a, b in combinations(below, 2) if not P.comparable(a, b)), None)
        if lo is None:
            continue
        hi = next(((a, b) for a, b in combinations(above, 2) if not P.comparable(a, b)), None)
        if hi is not None:
            return lo, z, hi
    return None


def contains_pencil(P: Poset) -> bool:
    return find_pencil(P) is not None


def hasse_components(P: Poset) -> list[list[int]]:
    parent = list(range(P.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in P.covers:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for v in range(P.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_tree_poset(P: Poset) -> bool:
    return (len(P.covers) == P.n - 1 and len(hasse_components(P)) == 1
            and not contains_pencil(P))


def is_forest_poset(P: Poset) -> bool:
    # acyclic undirected Hasse graph: |E| = |V| - #components
    comps = hasse_components(P)
    return len(P.covers) == P.n - len(comps) and not contains_pencil(P)


def edge_poset(P: Poset, labeling: EdgeLabeling | None = None, strict: bool = False) -> Poset:
    """Poset on the covers of a graded ``P``.

    ``(a<b)`` precedes ``(c<d)`` when ``b <= c`` in ``P``; with ``strict=True``
    the literal ``b < c`` reading is used instead, under which consecutive edges
    are incomparable.  Element ``k`` is the edge with variable index ``k``.
    """
    if not is_graded(P):
        raise UnsupportedInput("edge_poset needs a graded poset")
    if labeling is None:
        labeling = default_edge_labeling(P)
    check_edge_labeling(P, labeling)
    edges = sorted(labeling, key=lambda e: e.label)
    m = len(edges)
    rel = P.less if strict else P.leq
    less = [[rel(e.head, f.tail) for f in edges] for e in edges]
    covers = []
    for i in range(m):
        for j in range(m):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(m)):
                covers.append((i, j))
    names = tuple(e.name or f"y{e.label + 1}" for e in edges)
    return Poset(names, frozenset(covers))
