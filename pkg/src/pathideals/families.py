"""Edge subsets of diamonds and grids, and the corpus of small tree posets.

A grid family member is fixed by its connecting edges ``c_1 < ... < c_s``: it
holds the bottom strand below ``c_s``, the top strand above ``c_1`` and the
chosen connectors.  Its window ``(r, span)`` is ``(c_1, c_s - c_1)``.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from math import comb

import networkx as nx

from .errors import InvalidFamily, InvalidParameter
from .ideals import indices_of, popcount
from .poset import Poset, build_grid, contains_pencil, grid_edge_index


class Choice(Enum):
    FIRST = 1
    SECOND = 2
    BOTH = 3


def diamond_chain_edges(i: int, which: int) -> int:
    """Edge mask of chain ``which`` (1 or 2) of diamond ``i`` (0-based)."""
    return (0b11 if which == 1 else 0b1100) << (4 * i)


def diamond_edge_subset(n: int, choices) -> int:
    if len(choices) != n:
        raise InvalidParameter(f"need {n} choices, got {len(choices)}")
    mask = 0
    for i, c in enumerate(choices):
        c = Choice(c) if not isinstance(c, Choice) else c
        if c in (Choice.FIRST, Choice.BOTH):
            mask |= diamond_chain_edges(i, 1)
        if c in (Choice.SECOND, Choice.BOTH):
            mask |= diamond_chain_edges(i, 2)
    return mask


def classify_diamond_subset(n: int, mask: int) -> tuple[str, int]:
    """``("I", 0)``, ``("II", s)`` with ``s`` full diamonds, or ``("other", 0)``."""
    both = 0
    for i in range(n):
        block = (mask >> (4 * i)) & 0b1111
        if block == 0b1111:
            both += 1
        elif block not in (0b0011, 0b1100):
            return "other", 0
    return ("II", both) if both else ("I", 0)


def diamond_subset_homology(n: int, mask: int) -> dict[int, int]:
    """Expected reduced homology of the LD complex of ``D_n`` restricted to ``mask``."""
    kind, s = classify_diamond_subset(n, mask)
    if kind == "I":
        return {2 * n - 2: 1}
    if kind == "II":
        return {2 * n + s - 2: 1}
    return {}


# -- grid families ------------------------------------------------------------

def grid_edge_subset(n: int, connectors, window=None) -> int:
    """Edge mask of the grid family member with the given connecting edges.

    ``window`` may be given as ``(r, span)`` and must then agree with the
    connectors.
    """
    cs = sorted(set(connectors))
    if not cs:
        raise InvalidFamily("at least one connecting edge is needed")
    if cs[0] < 0 or cs[-1] > n - 1:
        raise InvalidFamily(f"connector positions must lie in 0..{n - 1}")
    lo, hi = cs[0], cs[-1]
    if window is not None and tuple(window) != (lo, hi - lo):
        raise InvalidFamily(f"window {tuple(window)} does not match connectors {cs}")
    mask = 0
    for s in range(hi):
        mask |= 1 << grid_edge_index(n, "0", s)
    for s in range(lo, n - 1):
        mask |= 1 << grid_edge_index(n, "1", s)
    for s in cs:
        mask |= 1 << grid_edge_index(n, "c", s)
    return mask


def block_connectors(blocks) -> list[int]:
    """Connecting-edge positions kept by the block sequence ``(i_1, ..., i_m)``."""
    pos = [0]
    for i in blocks:
        if i < 2:
            raise InvalidParameter("block sizes must be >= 2")
        pos.append(pos[-1] + i - 1)
    return pos


def block_sequences(n: int):
    """All ``(i_1, ..., i_m)`` with ``i_j >= 2`` and ``sum(i_j) - m + 1 = n``."""
    def rec(rest):
        if rest == 0:
            yield ()
            return
        for step in range(1, rest + 1):
            for tail in rec(rest - step):
                yield (step + 1,) + tail
    yield from rec(n - 1)


def grid_family_member(n: int, mask: int, min_connectors: int = 2):
    """``(s, t, connectors)`` if ``mask`` is a family member, else None.

    With ``min_connectors=1`` single maximal chains (``s = 1``) are accepted
    too; their restriction homology follows the same ``t - s - 1`` rule.
    """
    cs = [s for s in range(n) if mask >> grid_edge_index(n, "c", s) & 1]
    if len(cs) < max(1, min_connectors):
        return None
    if grid_edge_subset(n, cs) != mask:
        return None
    return len(cs), popcount(mask), tuple(cs)


def family_members(s: int, t: int, n: int) -> list[int]:
    out = []
    for cs in combinations(range(n), s):
        if s >= 2 and cs[-1] - cs[0] + n - 1 + s == t:
            out.append(grid_edge_subset(n, cs))
    return out


def count_family(s: int, t: int, n: int) -> int:
    """Number of members with ``s`` connectors and ``t`` edges, by enumeration."""
    if s < 2 or not n + 2 * s - 2 <= t <= 2 * n + s - 2:
        return 0
    return len(family_members(s, t, n))


def count_family_formula(s: int, t: int, n: int) -> int:
    if s < 2 or not n + 2 * s - 2 <= t <= 2 * n + s - 2:
        return 0
    return (2 * n - t + s - 1) * comb(t - n - s, s - 2)


# -- tree posets ----------------------------------------------------------------

def _orientations(tree: nx.Graph):
    edges = list(tree.edges())
    for bits in range(1 << len(edges)):
        yield [(a, b) if bits >> k & 1 else (b, a) for k, (a, b) in enumerate(edges)]


def enumerate_tree_posets(max_n: int = 7) -> list[Poset]:
    """All tree posets up to isomorphism with at most ``max_n`` elements."""
    out: list[Poset] = []
    for k in range(1, max_n + 1):
        # bucket by WL hash so isomorphism tests only run on collisions
        seen: dict[str, list[nx.DiGraph]] = {}
        for tree in nx.nonisomorphic_trees(k) if k > 1 else [nx.empty_graph(1)]:
            for arcs in _orientations(tree):
                g = nx.DiGraph()
                g.add_nodes_from(range(k))
                g.add_edges_from(arcs)
                bucket = seen.setdefault(nx.weisfeiler_lehman_graph_hash(g), [])
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                P = Poset.from_covers(k, arcs)
                if not contains_pencil(P):
                    out.append(P)
    return out


def grid_labels(n: int) -> list[str]:
    _, lab = build_grid(n)
    return [e.name for e in sorted(lab, key=lambda e: e.label)]


def mask_names(mask: int, names) -> list[str]:
    return [names[i] for i in indices_of(mask)]
