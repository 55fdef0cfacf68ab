import io
import json

import pytest

from classpres.cli import int_range, run
from classpres.verify import relator_outcomes, relator_outcomes_from_json
from classpres.groups import GroupSpec
from classpres.presentations import present


def call(*argv):
    out = io.StringIO()
    rc = run(list(argv), out)
    return rc, out.getvalue()


def test_present_sl22_text():
    rc, out = call("present", "--family", "SL", "--dim", "2", "--q", "2", "--format", "text")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "SL(2,2)"
    assert lines[1] == "generators: tau, U'"
    assert "relators: 3" in out


def test_present_json_round_trip():
    rc, out = call("present", "--family", "SU", "--dim", "4", "--q", "3", "--emit-tags")
    assert rc == 0
    data = json.loads(out)
    assert data["schema_version"] == 1
    g = GroupSpec("SU", 4, 3)
    assert relator_outcomes_from_json(data) == relator_outcomes(g, present(g))


def test_present_without_tags_drops_them():
    rc, out = call("present", "--family", "sl", "--dim", "3", "--q", "2")
    assert "tag" not in json.loads(out)["relators"][0]


def test_unsupported_omega_minus_4(capsys):
    rc, _ = call("present", "--family", "OmegaMinus", "--dim", "4", "--q", "3")
    assert rc == 2
    err = capsys.readouterr().err
    assert err.startswith("error: unsupported: ") and "PSL(2,q" in err


def test_usage_errors(capsys):
    assert call("present", "--family", "XX", "--dim", "3", "--q", "2")[0] == 2
    assert call("present", "--dim", "3")[0] == 2
    assert call("bogus")[0] == 2


def test_enumerate():
    rc, out = call("enumerate", "--family", "O-", "--dim", "6", "--q", "2")
    d = json.loads(out)
    assert rc == 0 and d["index"] == d["expected"] == 25920


def test_enumerate_subgroup_and_torus():
    rc, out = call("enumerate", "--family", "SL", "--dim", "3", "--q", "2", "--subgroup", "tau; U'")
    # <tau, U'> is the SL(2,2) block, of order 6
    assert rc == 0 and json.loads(out)["index"] == 168 // 6
    rc, out = call("enumerate", "--family", "SL", "--dim", "3", "--q", "4", "--torus", "--format", "text")
    assert rc == 0 and "index 54" in out


def test_enumerate_bad_subgroup_name():
    rc, _ = call("enumerate", "--family", "SL", "--dim", "3", "--q", "3", "--subgroup", "U")
    assert rc == 2


def test_enumerate_overflow_is_reported():
    rc, _ = call("enumerate", "--family", "SL", "--dim", "3", "--q", "3", "--max-cosets", "10")
    assert rc == 2


def test_generators_and_dictionary():
    rc, out = call("generators", "--family", "Sp", "--dim", "4", "--q", "3", "--role", "standard")
    d = json.loads(out)
    assert rc == 0 and d["role"] == "standard" and "x" in d["names"]
    rc, out = call("generators", "--family", "SL", "--dim", "2", "--q", "4", "--format", "text")
    assert rc == 0 and "w = field generator" in out
    rc, out = call("dictionary", "--family", "SU", "--dim", "3", "--q", "5", "--direction", "std->pres")
    d = json.loads(out)
    assert d["words"]["t"]["text"] == "y^-3*s"


def test_verify_single_and_grid(tmp_path):
    rc, out = call("verify", "--family", "SL", "--dim", "3", "--q", "2")
    assert rc == 0 and "1 groups, 0 with failures" in out
    p = tmp_path / "grid.txt"
    p.write_text("SL 2 3\nSp 4 2\n")
    rc, out = call("verify", "--grid", str(p), "--json", "--no-enumerate")
    d = json.loads(out)
    assert rc == 0 and d["groups"] == 2 and d["failures"] == 0


def test_metrics_ranges():
    rc, out = call("metrics", "--family", "SL", "--dim", "5..7", "--q", "3,9")
    rows = json.loads(out)["metrics"]
    assert rc == 0 and [(r["d"], r["q"]) for r in rows] == [(5, 3), (5, 9), (6, 3), (6, 9), (7, 3), (7, 9)]


def test_int_range():
    assert int_range("5") == [5]
    assert int_range("3..5,9") == [3, 4, 5, 9]


def test_seed_is_recorded():
    rc, out = call("present", "--family", "SU", "--dim", "3", "--q", "7", "--seed", "11")
    assert json.loads(out)["metadata"]["seed"] == 11


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_deterministic_output(fmt):
    args = ("present", "--family", "OmegaPlus", "--dim", "6", "--q", "3", "--format", fmt)
    assert call(*args) == call(*args)
