"""Command-line interface.

Posets are given as a JSON file or a builder string such as ``diamond:3``,
``grid:4``, ``chain:5``, ``antichain:2`` or ``cycle:3,2``.  Ideals are given
as a JSON file, ``ld:<poset>`` or ``path:<t>:<poset>``.  Complexes are a JSON
file, ``sr:<ideal>`` or ``facet:<ideal>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as pio
from .errors import PathIdealsError
from .homology import reduced_homology
from .ideals import (SquarefreeMonomialIdeal, height, krull_dim_quotient, ld_ideal,
                     path_ideal, primary_decomposition)
from .invariants import (betti_table_hochster, betti_table_lcm, depth_quotient,
                         is_cohen_macaulay, is_sequentially_cm, is_simplicial_forest,
                         projective_dimension, regularity)
from .poset import (build_antichain, build_chain, build_cycle, build_diamond, build_grid,
                    contains_pencil, is_graded, is_tree_poset, maximal_chains)
from .simplicial import SimplicialComplex, facet_complex, stanley_reisner_complex
from .verify import THEOREM_IDS, verify

FIELDS = ("gf2", "gf32003", "qq")


def load_poset(source: str):
    if os.path.exists(source):
        return pio.read_poset(source)
    kind, _, arg = source.partition(":")
    try:
        nums = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise PathIdealsError(f"bad poset source {source!r}") from None
    builders = {"chain": build_chain, "antichain": build_antichain, "cycle": build_cycle,
                "diamond": build_diamond, "grid": build_grid}
    if kind not in builders:
        raise PathIdealsError(f"unknown poset {source!r}; use a JSON file or one of {sorted(builders)}")
    out = builders[kind](*nums)
    return out if isinstance(out, tuple) else (out, None)


def load_ideal(source: str) -> SquarefreeMonomialIdeal:
    if os.path.exists(source):
        return pio.read_ideal(source)
    if source.startswith("ld:"):
        P, lab = load_poset(source[3:])
        return ld_ideal(P, lab)
    if source.startswith("path:"):
        t, _, rest = source[5:].partition(":")
        P, _ = load_poset(rest)
        return path_ideal(P, int(t))
    raise PathIdealsError(f"bad ideal source {source!r}")


def load_complex(source: str) -> SimplicialComplex:
    if os.path.exists(source):
        data = pio.read_json(source)
        if "facets" in data or data.get("void"):
            return SimplicialComplex.from_dict(data)
        return stanley_reisner_complex(SquarefreeMonomialIdeal.from_dict(data))
    if source.startswith("sr:"):
        return stanley_reisner_complex(load_ideal(source[3:]))
    if source.startswith("facet:"):
        return facet_complex(load_ideal(source[6:]))
    return stanley_reisner_complex(load_ideal(source))


def _emit(args, data, text: str) -> None:
    print(json.dumps(data, indent=2) if args.json else text)


def cmd_poset(args) -> int:
    P, lab = load_poset(args.source)
    doc = pio.poset_to_json(P, lab)
    if args.action == "build":
        print(json.dumps(doc, indent=2))
        return 0
    chains = maximal_chains(P)
    info = {"elements": P.n, "covers": len(P.covers), "maximal_chains": len(chains),
            "graded": is_graded(P), "pencil": contains_pencil(P), "tree": is_tree_poset(P)}
    lines = [f"{k:15s} {v}" for k, v in info.items()]
    lines += ["  " + " < ".join(P.labels[v] for v in c) for c in chains[:20]]
    _emit(args, {**info, "poset": doc}, "\n".join(lines))
    return 0


def cmd_ideal(args) -> int:
    P, lab = load_poset(args.source) if args.action != "decompose" else (None, None)
    if args.action == "path":
        I = path_ideal(P, args.t)
    elif args.action == "ld":
        I = ld_ideal(P, lab)
    else:
        I = load_ideal(args.source)
        comps = primary_decomposition(I)
        names = I.names()
        text = "\n".join("<" + ", ".join(names[v] for v in c.variables) + ">" for c in comps)
        text += f"\nheight {height(I)}, dim {krull_dim_quotient(I)}"
        _emit(args, {"components": [list(c.variables) for c in comps], "height": height(I),
                     "dim": krull_dim_quotient(I)}, text)
        return 0
    _emit(args, I.to_dict(), "\n".join(I.monomial_strings()) or "0")
    return 0


def cmd_complex(args) -> int:
    if args.action == "sr":
        D = stanley_reisner_complex(load_ideal(args.source))
    elif args.action == "facet":
        D = facet_complex(load_ideal(args.source))
    else:
        D = load_complex(args.source)
        h = reduced_homology(D, args.field)
        text = "\n".join(f"H~_{d}: {v}" for d, v in h.dims.items()) or "all zero"
        _emit(args, h.to_dict(), text)
        return 0
    _emit(args, D.to_dict(), "\n".join(str(list(f)) for f in D.facet_sets()))
    return 0


def cmd_betti(args) -> int:
    I = load_ideal(args.source)
    if args.method == "lcm":
        B = betti_table_lcm(I, args.field)
    else:
        B = betti_table_hochster(I, args.field, threads=args.threads)
    if args.csv:
        sys.stdout.write(B.to_csv())
        return 0
    inv = {"pd": projective_dimension(B), "reg": regularity(B), "depth": depth_quotient(B)}
    text = B.format() + "\n" + ", ".join(f"{k} {v}" for k, v in inv.items())
    _emit(args, {**B.to_dict(), **inv}, text)
    return 0


def cmd_check(args) -> int:
    if args.action == "forest":
        if os.path.exists(args.source) and "facets" in pio.read_json(args.source):
            D = pio.read_complex(args.source)
        else:
            I = load_ideal(args.source)
            D = facet_complex(I) if not I.is_zero else SimplicialComplex.empty(I.n_vars)
        result = is_simplicial_forest(D)
    else:
        D = load_complex(args.source)
        if args.action == "cm":
            result = is_cohen_macaulay(D, args.field)
        else:
            result = is_sequentially_cm(D, args.field)
    _emit(args, {"check": args.action, "result": result}, str(result).lower())
    return 0


def cmd_verify(args) -> int:
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    reports = [verify(t, field=args.field, threads=args.threads) for t in ids]
    if args.json:
        docs = [r.to_dict(timings=not args.no_timings) for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
    else:
        print("\n\n".join(r.format() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=FIELDS, default="gf32003")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="pathideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", parents=[common], help="build or inspect a poset")
    p.add_argument("action", choices=("build", "show"))
    p.add_argument("source")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("ideal", parents=[common], help="path or LD ideal, or minimal primes")
    p.add_argument("action", choices=("path", "ld", "decompose"))
    p.add_argument("source")
    p.add_argument("-t", type=int, default=2, help="path length in vertices")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("complex", parents=[common], help="Stanley-Reisner or facet complex, homology")
    p.add_argument("action", choices=("sr", "facet", "homology"))
    p.add_argument("source")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table of S/I")
    p.add_argument("source")
    p.add_argument("--method", choices=("hochster", "lcm"), default="hochster")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("check", parents=[common], help="forest, CM and sequential CM tests")
    p.add_argument("action", choices=("forest", "cm", "seqcm"))
    p.add_argument("source")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="run a theorem verification suite")
    p.add_argument("theorem", choices=THEOREM_IDS + ("all",))
    p.add_argument("--no-timings", action="store_true", help="omit wall times from JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PathIdealsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
