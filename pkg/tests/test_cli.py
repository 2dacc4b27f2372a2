import json
import subprocess
import sys

import pytest

from glinv.cli import CENSUS_COLUMNS, main
from helpers import DATA


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", str(DATA / "fig-6-87310.gauss"), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [c["brown"] for c in doc["colorings"]] == [4, 4]


def test_invariants_fig_3_5(capsys):
    code, out, _ = run(capsys, "invariants", str(DATA / "fig-3-5.gauss"), "--format", "json")
    assert [c["brown"] for c in json.loads(out)["colorings"]] == [2, "infinity"]


def test_invariants_unknot(capsys):
    code, out, _ = run(capsys, "invariants", str(DATA / "unknot.gauss"), "--format", "json")
    for c in json.loads(out)["colorings"]:
        assert (c["mu"], c["sigma"], c["nullity"], c["brown"]) == (0, 0, 0, 0)


def test_pretty_and_tsv(capsys):
    code, out, _ = run(capsys, "invariants", str(DATA / "trefoil.gauss"))
    assert code == 0 and "brown 4" in out
    code, out, _ = run(capsys, "invariants", str(DATA / "trefoil.gauss"), "--format", "tsv")
    lines = out.strip().split("\n")
    assert lines[0].split("\t")[0] == "label" and len(lines) == 3


def test_deterministic(capsys):
    outs = {run(capsys, "invariants", str(DATA / "fig-6-87310.gauss"), "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.gauss"
    bad.write_text("O1+U1-")
    assert run(capsys, "invariants", str(bad))[0] == 2
    assert run(capsys, "invariants", str(tmp_path / "missing.gauss"))[0] == 2
    virtual = tmp_path / "v.gauss"
    virtual.write_text("O1-O2-U1-U2-")
    assert run(capsys, "invariants", str(virtual))[0] == 3
    hopf = tmp_path / "hopf.gauss"
    hopf.write_text("O1+U2+;U1+O2+")
    assert run(capsys, "invariants", str(hopf))[0] == 0
    code, _, err = run(capsys, "slice", str(hopf))
    assert code == 4 and "knot" in err


def test_form(capsys):
    code, out, _ = run(capsys, "form", "1,-1,-1;-1,1,-1;-1,-1,1", "--format", "json")
    doc = json.loads(out)
    assert (doc["monsky"], doc["brown"], doc["radical_dim"], doc["proper"]) == ("4+4i", 1, 2, True)
    doc = json.loads(run(capsys, "form", "2", "--format", "json")[1])
    assert doc["brown"] == "infinity" and doc["proper"] is False
    doc = json.loads(run(capsys, "form", "", "--format", "json")[1])
    assert doc["brown"] == 0
    doc = json.loads(run(capsys, "form", "1,0,1;0,0,1;1,1,0", "--mode", "special", "--format", "json")[1])
    assert (doc["monsky"], doc["brown"]) == ("2+2i", 1)
    assert run(capsys, "form", "1,2;3,4")[0] == 2


def test_cap_flag(capsys, monkeypatch):
    assert run(capsys, "form", "1,1;1,1", "--cap", "0")[0] == 1
    monkeypatch.setenv("GLINV_CAP", "30")
    assert run(capsys, "form", "1")[0] == 0


def test_slice(capsys):
    code, out, _ = run(capsys, "slice", str(DATA / "fig-6-87310.gauss"), "--format", "json")
    assert json.loads(out)["verdict"] == "Obstructed"
    code, out, _ = run(capsys, "slice", str(DATA / "unknot.gauss"), "--format", "json")
    assert json.loads(out)["verdict"] == "NotObstructed"
    code, out, _ = run(capsys, "slice", str(DATA / "fig-3-5.gauss"))
    assert "Obstructed" in out


def test_census(capsys, tmp_path):
    for name in ("fig-6-87310.gauss", "fig-3-5.gauss"):
        (tmp_path / name).write_text((DATA / name).read_text())
    code, out, _ = run(capsys, "census", str(tmp_path))
    rows = [line.split("\t") for line in out.rstrip("\n").split("\n")]
    assert code == 0 and rows[0] == list(CENSUS_COLUMNS)
    assert [r[0] for r in rows[1:]] == ["fig-3-5.gauss", "fig-6-87310.gauss"]
    assert rows[1][CENSUS_COLUMNS.index("brown_xi*")] == "infinity"

    (tmp_path / "a-broken.gauss").write_text("O1+O1+")
    code, out, _ = run(capsys, "census", str(tmp_path))
    rows = [line.split("\t") for line in out.rstrip("\n").split("\n")]
    assert code == 0 and len(rows) == 4
    assert "Over twice" in rows[1][-1]


def test_census_empty(capsys, tmp_path):
    code, out, _ = run(capsys, "census", str(tmp_path))
    assert code == 0 and out.strip() == "\t".join(CENSUS_COLUMNS)


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "7", "--cases", "50")
    assert code == 0 and "50 cases passed" in out


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "glinv.cli", "form", "-3"], capture_output=True, text=True)
    assert out.returncode == 0 and "1+1i" in out.stdout


def test_requires_command(capsys):
    with pytest.raises(SystemExit):
        main([])
