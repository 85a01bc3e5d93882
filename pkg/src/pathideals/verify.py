"""Brute-force verification of the closed forms and classifications.

Each theorem id maps to a default parameter grid and a pure ``check``
function returning ``(expected, computed)`` for one grid cell.  A cell passes
when the two are equal.  Cells where no closed form applies carry
``expected = None``; they are recorded and never counted as passes or
failures.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from math import comb

from .errors import InvalidParameter
from .families import (block_connectors, block_sequences, classify_diamond_subset,
                       count_family, count_family_formula, diamond_subset_homology,
                       enumerate_tree_posets, grid_edge_subset, grid_family_member)
from .homology import GF2, GF32003, _as_field, homology_from_faces, reduced_homology
from .ideals import (chain_edge_sets, height, indices_of, intersect_ideals,
                     krull_dim_quotient, ld_ideal, path_ideal, prime_ideal,
                     primary_decomposition)
from .invariants import (betti_table_hochster, betti_table_lcm, closed_form_chains,
                         closed_form_diamond, closed_form_grid_path, cycle_height_formula,
                         depth_quotient, is_cohen_macaulay, is_sequentially_cm,
                         is_simplicial_forest, is_simplicial_tree, line_pd_formula,
                         projective_dimension, reg_lower_bound, regularity)
from .poset import (Poset, build_chain, build_cycle, build_diamond, build_grid,
                    grid_edge_index)
from .simplicial import (facet_complex, link, restriction, stanley_reisner_complex,
                         stanley_reisner_faces)

SCHEMA = "pathideals.verify/1"


@dataclass
class VerifyCase:
    params: dict
    expected: object
    computed: object
    verdict: str
    seconds: float


@dataclass
class VerifyReport:
    theorem_id: str
    field: str
    cases: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.verdict != "fail" for c in self.cases) and any(
            c.verdict == "pass" for c in self.cases)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "recorded": 0}
        for c in self.cases:
            out[c.verdict] += 1
        return out

    def to_dict(self, timings: bool = True) -> dict:
        cases = []
        for c in self.cases:
            d = asdict(c)
            if not timings:
                d.pop("seconds")
            cases.append(d)
        return {"schema": SCHEMA, "theorem_id": self.theorem_id, "field": self.field,
                "passed": self.passed, "counts": self.counts(), "cases": cases}

    def format(self) -> str:
        lines = [f"{self.theorem_id} [{self.field}]"]
        for c in self.cases:
            params = ", ".join(f"{k}={v}" for k, v in c.params.items())
            lines.append(f"  {c.verdict:8s} {params:40s} {c.seconds:7.3f}s")
            if c.verdict == "fail":
                lines.append(f"           expected {c.expected}")
                lines.append(f"           computed {c.computed}")
        k = self.counts()
        lines.append(f"  {'PASS' if self.passed else 'FAIL'}: {k['pass']} pass, "
                     f"{k['fail']} fail, {k['recorded']} recorded")
        return "\n".join(lines)


def _entries(B) -> list:
    return [[i, j, v] for (i, j), v in B.entries.items()]


def _dims(d: dict) -> dict:
    return {str(k): v for k, v in sorted(d.items())}


def _betti(I, f, n_limit: int = 13):
    # the generator-subset route wins once the variable count grows
    return betti_table_hochster(I, f) if I.n_vars <= n_limit else betti_table_lcm(I, f)


# -- diamond ------------------------------------------------------------------

def _diamond_ideal(n, kind):
    P, lab = build_diamond(n)
    return ld_ideal(P, lab) if kind == "ld" else path_ideal(P, 2 * n + 1)


def _check_diamond_betti(p, f):
    n, kind = p["n"], p["ideal"]
    exp = closed_form_diamond(n, path=kind == "path")
    B = betti_table_hochster(_diamond_ideal(n, kind), f)
    return _entries(exp), _entries(B)


def _check_diamond_invariants(p, f):
    n = p["n"]
    exp, got = {}, {}
    for kind, reg, depth, ht, dim in (("ld", 3 * n - 1, 3 * n - 1, 2, 4 * n - 2),
                                      ("path", 2 * n, 2 * n, 1, 3 * n)):
        I = _diamond_ideal(n, kind)
        B = betti_table_hochster(I, f)
        exp.update({f"pd_{kind}": n + 1, f"reg_{kind}": reg, f"depth_{kind}": depth,
                    f"height_{kind}": ht, f"dim_{kind}": dim})
        got.update({f"pd_{kind}": projective_dimension(B), f"reg_{kind}": regularity(B),
                    f"depth_{kind}": depth_quotient(B), f"height_{kind}": height(I),
                    f"dim_{kind}": krull_dim_quotient(I)})
    D = stanley_reisner_complex(_diamond_ideal(n, "ld"))
    exp["cm_ld"] = n == 1
    got["cm_ld"] = is_cohen_macaulay(D, f, method="betti")
    return exp, got


# -- grid ---------------------------------------------------------------------

def _check_chains_betti(p, f):
    n = p["n"]
    P, lab = build_grid(n)
    B = betti_table_hochster(ld_ideal(P, lab), f)
    exp = closed_form_chains(n)
    return ({"table": _entries(exp), "totals": {str(i): comb(n, i) for i in range(n + 1)}},
            {"table": _entries(B), "totals": {str(i): v for i, v in B.totals().items()}})


def _check_chains_invariants(p, f):
    n = p["n"]
    P, lab = build_grid(n)
    I = ld_ideal(P, lab)
    J = path_ideal(P, n + 1)
    B = betti_table_hochster(I, f)
    exp = {"pd": n, "reg": 2 * n - 2, "depth": 2 * n - 2, "height": 2, "dim": 3 * n - 4,
           "path_height": 1, "path_dim": 2 * n - 1}
    got = {"pd": projective_dimension(B), "reg": regularity(B), "depth": depth_quotient(B),
           "height": height(I), "dim": krull_dim_quotient(I),
           "path_height": height(J), "path_dim": krull_dim_quotient(J)}
    return exp, got


def _check_grid_path_betti(p, f):
    n = p["n"]
    P, _ = build_grid(n)
    B = betti_table_hochster(path_ideal(P, n + 1), f)
    exp = {"table": _entries(closed_form_grid_path(n)), "pd": 2, "reg": n, "depth": 2 * n - 2}
    got = {"table": _entries(B), "pd": projective_dimension(B), "reg": regularity(B),
           "depth": depth_quotient(B)}
    return exp, got


# -- lines ---------------------------------------------------------------------

def _check_line_height(p, f):
    n, t = p["n"], p["t"]
    return n // t, height(path_ideal(build_chain(n), t))


def _check_line_cm(p, f):
    n, t = p["n"], p["t"]
    D = stanley_reisner_complex(path_ideal(build_chain(n), t))
    reisner = is_cohen_macaulay(D, f)
    betti = is_cohen_macaulay(D, f, method="betti")
    return ({"cm": n in (t, 2 * t), "routes_agree": True},
            {"cm": reisner, "routes_agree": reisner == betti})


def _check_line_pd(p, f):
    n, t = p["n"], p["t"]
    return line_pd_formula(n, t), projective_dimension(_betti(path_ideal(build_chain(n), t), f))


# -- cycles --------------------------------------------------------------------

def _check_cycle_height(p, f):
    m, r, t = p["m"], p["r"], p["t"]
    return cycle_height_formula(m, r, t), height(path_ideal(build_cycle(m, r), t))


def _cycle_tree_predicted(m, r, t):
    if m != r:
        return t > min(m, r)
    return t == m


def _check_cycle_forest(p, f):
    m, r, t = p["m"], p["r"], p["t"]
    I = path_ideal(build_cycle(m, r), t)
    return _cycle_tree_predicted(m, r, t), is_simplicial_tree(facet_complex(I))


def _check_cycle_cm(p, f):
    m, r, t = p["m"], p["r"], p["t"]
    D = stanley_reisner_complex(path_ideal(build_cycle(m, r), t))
    got = {"cm": is_cohen_macaulay(D, f), "seqcm": is_sequentially_cm(D, f)}
    if m != r and t > min(m, r):
        return {"cm": t == max(m, r) or 2 * t == max(m, r), "seqcm": True}, got
    if m == r and t == m:
        return {"cm": t == 2, "seqcm": True}, got
    return None, got


# -- tree posets ----------------------------------------------------------------

_TREES: dict[int, list[Poset]] = {}


def _trees(max_n):
    if max_n not in _TREES:
        _TREES[max_n] = enumerate_tree_posets(max_n)
    return _TREES[max_n]


def _check_forest_seqcm(p, f):
    size, t = p["size"], p["t"]
    posets = [P for P in _trees(size) if P.n == size]
    got = {"posets": len(posets), "forest": 0, "seqcm_gf2": 0, "seqcm_gf32003": 0}
    for P in posets:
        I = path_ideal(P, t)
        if I.is_zero:
            # S/0 is a polynomial ring and the facet complex is empty
            for k in ("forest", "seqcm_gf2", "seqcm_gf32003"):
                got[k] += 1
            continue
        got["forest"] += is_simplicial_forest(facet_complex(I))
        D = stanley_reisner_complex(I)
        got["seqcm_gf2"] += is_sequentially_cm(D, GF2)
        got["seqcm_gf32003"] += is_sequentially_cm(D, GF32003)
    exp = {"posets": len(posets), "forest": len(posets), "seqcm_gf2": len(posets),
           "seqcm_gf32003": len(posets)}
    return exp, got


# -- regularity bound -----------------------------------------------------------

def _reg_corpus():
    out = [(f"L_{n}", build_chain(n)) for n in range(2, 10)]
    out += [(f"C_{m},{r}", build_cycle(m, r)) for m in range(2, 6) for r in range(2, 6)
            if (m, r) != (2, 2)]
    out += [(f"D_{n}", build_diamond(n)[0]) for n in (1, 2)]
    out += [(f"L_2x{n}", build_grid(n)[0]) for n in (2, 3, 4)]
    out += [(f"tree{k}", P) for k, P in enumerate(_trees(6)) if P.n >= 2]
    return out


def _check_reg_bound(p, f):
    if "line" in p:
        s, t = p["s"], p["t"]
        n = s * (t + 1) + t
        I = path_ideal(build_chain(n), t)
        bound, _ = reg_lower_bound(build_chain(n), t)
        value = (t - 1) * (s + 1)
        return {"reg": value, "bound": value}, {"reg": regularity(_betti(I, f)), "bound": bound}
    P = dict(_reg_corpus())[p["poset"]]
    t = p["t"]
    I = path_ideal(P, t)
    if I.is_zero:
        return {"reg_ge_bound": True}, {"reg_ge_bound": True}
    bound, _ = reg_lower_bound(P, t)
    reg = regularity(_betti(I, f))
    return {"reg_ge_bound": True}, {"reg_ge_bound": reg >= bound}


# -- primary decomposition ------------------------------------------------------

def _ld_corpus():
    out = [(f"D_{n}", build_diamond(n)) for n in (1, 2, 3)]
    out += [(f"L_2x{n}", build_grid(n)) for n in (2, 3, 4, 5)]
    out += [(f"C_{m},{r}", (build_cycle(m, r), None)) for m in range(2, 6) for r in range(2, 6)
            if (m, r) != (2, 2)]
    out += [(f"tree{k}", (P, None)) for k, P in enumerate(_trees(6)) if P.n >= 2]
    return out


def minimal_cut_sets(chain_sets: list[int], n_edges: int) -> list[int]:
    """Brute force over all edge subsets; only for small edge counts."""
    cuts = [c for c in range(1 << n_edges) if all(c & ch for ch in chain_sets)]
    cut_set = set(cuts)
    return sorted(c for c in cuts if not any((c & ~(1 << e)) in cut_set for e in indices_of(c)))


def _check_primary_decomp(p, f):
    P, lab = dict(_ld_corpus())[p["poset"]]
    I = ld_ideal(P, lab)
    comps = primary_decomposition(I)
    total = prime_ideal(I.n_vars, comps[0])
    for c in comps[1:]:
        total = intersect_ideals(total, prime_ideal(I.n_vars, c))
    cuts = minimal_cut_sets(chain_edge_sets(P, lab), I.n_vars)
    return ({"intersection": I.generator_sets(), "cut_sets": len(cuts), "match": True},
            {"intersection": total.generator_sets(), "cut_sets": len(comps),
             "match": sorted(c.mask for c in comps) == cuts})


# -- homology oracles -------------------------------------------------------------

def _restricted_homology(faces, gens, w, f):
    """Homology of the restriction to ``w``; zero at once if some vertex is a cone point."""
    inside = 0
    for g in gens:
        if g & ~w == 0:
            inside |= g
    if inside != w:
        return {}
    return homology_from_faces([x for x in faces if x & ~w == 0], f)


def _check_homology_oracles(p, f):
    kind = p["kind"]
    if kind == "diamond-full":
        n = p["n"]
        P, lab = build_diamond(n)
        return _dims({3 * n - 2: 1}), _dims(reduced_homology(
            stanley_reisner_complex(ld_ideal(P, lab)), f).dims)
    if kind == "diamond-subsets":
        n = p["n"]
        P, lab = build_diamond(n)
        I = ld_ideal(P, lab)
        faces = stanley_reisner_faces(I)
        masks = range(1, 1 << I.n_vars)
        if p.get("sample"):
            rng = random.Random(p["sample"])
            typed = [w for w in masks if classify_diamond_subset(n, w)[0] != "other"]
            masks = sorted(set(typed) | set(rng.sample(list(masks), p["size"])))
        bad = [indices_of(w) for w in masks
               if _restricted_homology(faces, I.generators, w, f) != diamond_subset_homology(n, w)]
        return {"checked": len(masks), "mismatches": []}, {"checked": len(masks), "mismatches": bad}
    if kind == "grid-blocks":
        n = p["n"]
        P, lab = build_grid(n)
        D = stanley_reisner_complex(ld_ideal(P, lab))
        exp, got = {}, {}
        for blocks in block_sequences(n):
            W = restriction(D, grid_edge_subset(n, block_connectors(blocks)))
            key = ",".join(map(str, blocks))
            exp[key] = [_dims({2 * n - 3: 1}), _dims({2 * n - 4: 1})]
            c0 = 1 << grid_edge_index(n, "c", 0)
            got[key] = [_dims(reduced_homology(W, f).dims),
                        _dims(reduced_homology(link(W, c0), f).dims)]
        return exp, got
    if kind == "grid-subsets":
        n = p["n"]
        P, lab = build_grid(n)
        I = ld_ideal(P, lab)
        faces = stanley_reisner_faces(I)
        bad = []
        for w in range(1, 1 << I.n_vars):
            mem = grid_family_member(n, w, min_connectors=1)
            exp = {mem[1] - mem[0] - 1: 1} if mem else {}
            if _restricted_homology(faces, I.generators, w, f) != exp:
                bad.append(indices_of(w))
        return ({"checked": (1 << I.n_vars) - 1, "mismatches": []},
                {"checked": (1 << I.n_vars) - 1, "mismatches": bad})
    raise InvalidParameter(f"unknown oracle kind {kind!r}")


def _check_family_counts(p, f):
    n = p["n"]
    exp, got = {}, {}
    for s in range(2, n + 1):
        for t in range(n + 2 * s - 2, 2 * n + s - 1):
            exp[f"{s},{t}"] = count_family_formula(s, t, n)
            got[f"{s},{t}"] = count_family(s, t, n)
        exp[f"{s},*"] = comb(n, s)
        got[f"{s},*"] = sum(count_family(s, t, n) for t in range(3 * n))
    return exp, got


# -- registry -------------------------------------------------------------------

def _grid_cycles(hi, t_hi, cap_t=True):
    for m, r in product(range(2, hi + 1), repeat=2):
        if (m, r) == (2, 2):
            continue
        top = min(t_hi, max(m, r)) if cap_t else t_hi
        for t in range(2, top + 1):
            yield {"m": m, "r": r, "t": t}


def _default_grid(theorem_id):
    if theorem_id == "diamond-betti":
        return [{"n": n, "ideal": k} for n in (1, 2, 3) for k in ("ld", "path")]
    if theorem_id == "diamond-invariants":
        return [{"n": n} for n in (1, 2, 3)]
    if theorem_id == "chains-betti":
        return [{"n": n} for n in (2, 3, 4)]
    if theorem_id in ("chains-invariants", "grid-path-betti"):
        return [{"n": n} for n in (2, 3, 4, 5)]
    if theorem_id == "line-height":
        return [{"n": n, "t": t} for n in range(2, 11) for t in range(2, n + 1)]
    if theorem_id == "line-cm":
        return [{"n": n, "t": t} for n in range(2, 9) for t in range(2, n + 1)]
    if theorem_id == "line-pd":
        return [{"n": n, "t": t} for n in range(2, 10) for t in range(2, n + 1)]
    if theorem_id == "cycle-height":
        return list(_grid_cycles(7, 7, cap_t=False))
    if theorem_id in ("cycle-forest", "cycle-cm"):
        return list(_grid_cycles(5, 6))
    if theorem_id == "forest-seqcm":
        return [{"size": k, "t": t} for k in range(1, 8) for t in range(2, 6)]
    if theorem_id == "reg-bound":
        grid = [{"poset": name, "t": t} for name, _ in _reg_corpus() for t in range(2, 6)]
        grid += [{"line": True, "s": s, "t": t} for t in (2, 3, 4) for s in (0, 1, 2)]
        return grid
    if theorem_id == "primary-decomp":
        return [{"poset": name} for name, _ in _ld_corpus()]
    if theorem_id == "homology-oracles":
        grid = [{"kind": "diamond-full", "n": n} for n in (1, 2, 3)]
        grid += [{"kind": "diamond-subsets", "n": 2},
                 {"kind": "diamond-subsets", "n": 3, "sample": 7, "size": 400}]
        grid += [{"kind": "grid-blocks", "n": n} for n in (2, 3, 4, 5)]
        grid += [{"kind": "grid-subsets", "n": n} for n in (2, 3, 4, 5)]
        return grid
    if theorem_id == "family-counts":
        return [{"n": n} for n in range(2, 7)]
    raise InvalidParameter(f"unknown theorem id {theorem_id!r}")


CHECKS = {
    "diamond-betti": _check_diamond_betti,
    "diamond-invariants": _check_diamond_invariants,
    "chains-betti": _check_chains_betti,
    "chains-invariants": _check_chains_invariants,
    "grid-path-betti": _check_grid_path_betti,
    "line-height": _check_line_height,
    "line-cm": _check_line_cm,
    "line-pd": _check_line_pd,
    "cycle-height": _check_cycle_height,
    "cycle-forest": _check_cycle_forest,
    "cycle-cm": _check_cycle_cm,
    "forest-seqcm": _check_forest_seqcm,
    "reg-bound": _check_reg_bound,
    "primary-decomp": _check_primary_decomp,
    "homology-oracles": _check_homology_oracles,
    "family-counts": _check_family_counts,
}

THEOREM_IDS = tuple(CHECKS)


def _run_case(args):
    theorem_id, params, p = args
    t0 = time.perf_counter()
    expected, computed = CHECKS[theorem_id](params, _as_field(p))
    dt = time.perf_counter() - t0
    if expected is None:
        verdict = "recorded"
    else:
        verdict = "pass" if expected == computed else "fail"
    return VerifyCase(dict(params), expected, computed, verdict, round(dt, 4))


def verify(theorem_id: str, grid=None, field=None, threads: int = 1) -> VerifyReport:
    """Run one theorem's suite over ``grid`` (default grid when None)."""
    if theorem_id not in CHECKS:
        raise InvalidParameter(f"unknown theorem id {theorem_id!r}; choose from {', '.join(CHECKS)}")
    f = _as_field(field)
    cells = list(grid) if grid is not None else _default_grid(theorem_id)
    jobs = [(theorem_id, c, f.p) for c in cells]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            cases = list(pool.map(_run_case, jobs))
    else:
        cases = [_run_case(j) for j in jobs]
    return VerifyReport(theorem_id, f.name, cases)
