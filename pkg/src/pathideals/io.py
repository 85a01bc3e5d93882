"""JSON reading and writing for posets, ideals, complexes and results.

All index lists are 0-based.  A poset document may carry an optional
``edge_labels`` list of ``[tail, head, label, name]`` entries (element names,
0-based variable index) so that LD ideals keep a fixed labeling.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidPoset, UnsupportedInput
from .homology import HomologyProfile
from .ideals import SquarefreeMonomialIdeal
from .invariants import BettiTable
from .poset import EdgeLabeling, LabeledEdge, Poset, check_edge_labeling
from .simplicial import SimplicialComplex


def poset_to_json(P: Poset, labeling: EdgeLabeling | None = None) -> dict:
    out = P.to_dict()
    if labeling is not None:
        out["edge_labels"] = [[P.labels[e.tail], P.labels[e.head], e.label, e.name]
                              for e in sorted(labeling, key=lambda e: e.label)]
    return out


def poset_from_json(data: dict) -> tuple[Poset, EdgeLabeling | None]:
    P = Poset.from_dict(data)
    if "edge_labels" not in data:
        return P, None
    index = {name: i for i, name in enumerate(P.labels)}
    try:
        labeling = tuple(
            LabeledEdge(index[str(e[0])], index[str(e[1])], int(e[2]), str(e[3]) if len(e) > 3 else "")
            for e in data["edge_labels"])
    except (KeyError, IndexError) as exc:
        raise InvalidPoset(f"bad edge label entry: {exc}") from None
    check_edge_labeling(P, labeling)
    return P, labeling


def to_json(obj) -> dict:
    if isinstance(obj, Poset):
        return poset_to_json(obj)
    if isinstance(obj, (SquarefreeMonomialIdeal, SimplicialComplex, HomologyProfile, BettiTable)):
        return obj.to_dict()
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise UnsupportedInput(f"no JSON form for {type(obj).__name__}")


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(to_json(obj), indent=indent)


def read_json(path) -> dict:
    with open(Path(path), encoding="utf-8") as fh:
        return json.load(fh)


def write_json(obj, path) -> None:
    Path(path).write_text(dumps(obj) + "\n", encoding="utf-8")


def read_poset(path) -> tuple[Poset, EdgeLabeling | None]:
    return poset_from_json(read_json(path))


def read_ideal(path) -> SquarefreeMonomialIdeal:
    return SquarefreeMonomialIdeal.from_dict(read_json(path))


def read_complex(path) -> SimplicialComplex:
    return SimplicialComplex.from_dict(read_json(path))
