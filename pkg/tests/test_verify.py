from __future__ import annotations

import pytest

from pathideals.errors import InvalidParameter
from pathideals.verify import SCHEMA, THEOREM_IDS, VerifyReport, minimal_cut_sets, verify

SMALL = {
    "diamond-betti": [{"n": 1, "ideal": "ld"}, {"n": 2, "ideal": "path"}],
    "diamond-invariants": [{"n": 1}, {"n": 2}],
    "chains-betti": [{"n": 2}, {"n": 3}],
    "chains-invariants": [{"n": 2}, {"n": 3}],
    "grid-path-betti": [{"n": 2}, {"n": 3}],
    "line-height": [{"n": 6, "t": 2}, {"n": 7, "t": 3}],
    "line-cm": [{"n": 4, "t": 2}, {"n": 5, "t": 2}],
    "line-pd": [{"n": 7, "t": 3}],
    "cycle-height": [{"m": 3, "r": 2, "t": 2}, {"m": 4, "r": 3, "t": 5}],
    "cycle-forest": [{"m": 3, "r": 3, "t": 2}, {"m": 3, "r": 2, "t": 3}],
    "cycle-cm": [{"m": 3, "r": 3, "t": 3}, {"m": 4, "r": 2, "t": 2}],
    "forest-seqcm": [{"size": 4, "t": 2}, {"size": 5, "t": 3}],
    "reg-bound": [{"line": True, "s": 1, "t": 3}],
    "primary-decomp": None,
    "homology-oracles": [{"kind": "diamond-full", "n": 2}, {"kind": "grid-blocks", "n": 3}],
    "family-counts": [{"n": 3}, {"n": 4}],
}


def test_every_id_has_a_small_grid():
    assert set(SMALL) == set(THEOREM_IDS) and len(THEOREM_IDS) == 16


@pytest.mark.parametrize("tid", THEOREM_IDS)
def test_suites_pass_on_small_grids(tid):
    # None runs the default grid
    report = verify(tid, grid=SMALL[tid])
    assert report.passed, report.format()


def test_unknown_id():
    with pytest.raises(InvalidParameter):
        verify("no-such-theorem")


def test_threads_identical():
    a = verify("line-cm", threads=2).to_dict(timings=False)
    b = verify("line-cm").to_dict(timings=False)
    assert a == b


def test_report_schema():
    doc = verify("chains-betti", grid=[{"n": 2}], field="qq").to_dict()
    assert doc["schema"] == SCHEMA and doc["field"] == "qq"
    assert doc["counts"] == {"pass": 1, "fail": 0, "recorded": 0}
    case = doc["cases"][0]
    assert set(case) == {"params", "expected", "computed", "verdict", "seconds"}


def test_empty_report_does_not_pass():
    assert not VerifyReport("x", "gf2").passed


def test_recorded_cells_are_neutral():
    # non-graded cycle with t at most the shorter strand: no closed form
    rep = verify("cycle-cm", grid=[{"m": 5, "r": 3, "t": 2}, {"m": 3, "r": 3, "t": 3}])
    assert rep.counts()["recorded"] == 1 and rep.passed


def test_minimal_cut_sets():
    # two chains {0,1} and {2,3}: every cut takes one edge from each
    assert sorted(minimal_cut_sets([0b0011, 0b1100], 4)) == [0b0101, 0b0110, 0b1001, 0b1010]
