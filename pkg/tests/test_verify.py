import json

import pytest
from hypothesis import given, settings, strategies as st

from classpres.groups import GroupSpec, UnsupportedGroup
from classpres.presentations import present
from classpres.verify import (Budget, builtin_grid, load_grid, relator_outcomes, relator_outcomes_from_json,
                              verify_grid, verify_group)

from oracles import FROZEN


def test_sl33():
    rep = verify_group(GroupSpec("SL", 3, 3))
    assert rep.ok, rep.summary()
    assert all(r["outcome"] == "identity" for r in rep.relators)
    c = rep.check("enumerate")
    assert c.status == "ok" and f"index {FROZEN['sl3_3']}," in c.detail


def test_psp43_quotient():
    rep = verify_group(GroupSpec("Sp", 4, 3, True))
    assert rep.ok, rep.summary()
    assert {r["outcome"] for r in rep.relators} <= {"identity", "central"}
    assert "central" in {r["outcome"] for r in rep.relators}
    assert "index 25920," in rep.check("enumerate").detail


def test_su72_skips_enumeration():
    rep = verify_group(GroupSpec("SU", 7, 2))
    assert rep.ok
    c = rep.check("enumerate")
    assert c.status == "skipped" and "budget" in c.detail


def test_report_json_and_summary():
    rep = verify_group(GroupSpec("SL", 2, 4), enumerate_full=False)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["ok"] and data["name"] == "SL(2,4)"
    assert {c["name"] for c in data["checks"]} >= {"generators", "dictionary", "center", "torus-relators"}
    assert rep.summary().startswith("SL(2,4): ok")


def test_budget_int_shorthand():
    rep = verify_group(GroupSpec("SL", 3, 2), budget=10)
    assert rep.check("enumerate").status == "skipped"


def test_builtin_grid_shape():
    grid = builtin_grid()
    assert len(grid) == 60 + 36 + 30 + 15 + 8 + 8
    assert len(builtin_grid(True)) == 2 * len(grid)
    assert GroupSpec("OmegaMinus", 8, 5) in grid


def test_load_grid(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# comment\nSL 3 2\nSp 4 3 quotient\n")
    assert load_grid(str(p)) == [GroupSpec("SL", 3, 2), GroupSpec("Sp", 4, 3, True)]
    j = tmp_path / "g.json"
    j.write_text(json.dumps([{"family": "SU", "d": 4, "q": 2}]))
    assert load_grid(str(j)) == [GroupSpec("SU", 4, 2)]
    bad = tmp_path / "bad.txt"
    bad.write_text("OmegaMinus 4 3\n")
    with pytest.raises(UnsupportedGroup):
        load_grid(str(bad))


def test_verify_grid_parallel_matches_serial():
    grid = [GroupSpec("SL", 2, 3), GroupSpec("Sp", 4, 2), GroupSpec("SU", 3, 2)]
    b = Budget()
    s = [r.to_json() for r in verify_grid(grid, b, jobs=1)]
    p = [r.to_json() for r in verify_grid(grid, b, jobs=2)]
    for x, y in zip(s, p):
        x.pop("timings"), y.pop("timings")
    assert s == p


CASES = [("SL", 3, 4, False), ("Sp", 6, 3, True), ("SU", 4, 3, False), ("SU", 5, 4, True), ("SU", 3, 7, False),
         ("OmegaPlus", 8, 3, False), ("OmegaCircle", 7, 3, False), ("OmegaMinus", 6, 5, True)]


@settings(max_examples=16, deadline=None)
@given(st.sampled_from(CASES))
def test_json_replay_matches_direct_evaluation(case):
    g = GroupSpec(*case)
    P = present(g)
    data = json.loads(json.dumps(P.to_json()))
    assert relator_outcomes_from_json(data) == relator_outcomes(g, P)
