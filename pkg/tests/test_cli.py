import csv
import io
import json
from pathlib import Path

import pytest

from exel_sgpd.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys):
    assert run(capsys, "validate", DATA / "g1.json")[0] == 0
    code, out, _ = run(capsys, "validate", DATA / "broken_inverse.json")
    assert code == 1 and json.loads(out)["violations"]
    code, _, err = run(capsys, "validate", DATA / "missing.json")
    assert code == 2 and "missing.json" in err


def test_malformed_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "validate", p)[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate-sg", DATA / "g1.json")
    assert code == 0 and json.loads(out)["info"]["size"] == 6
    code, out, _ = run(capsys, "enumerate-sg", DATA / "z2.json", "--oracle-maxlen", "6")
    data = json.loads(out)
    assert code == 0 and data["info"]["size"] == 3 and data["info"]["oracle"]["classes"] == 3
    code, out, _ = run(capsys, "enumerate-sg", DATA / "trivial.json")
    assert json.loads(out)["info"]["size"] == 1


def test_enumerate_budget(capsys):
    assert run(capsys, "enumerate-sg", DATA / "z3.json", "--budget", "2")[0] == 2
    assert run(capsys, "enumerate-sg", DATA / "z2.json", "--oracle-maxlen", "9")[0] == 2


def test_actions(capsys):
    assert run(capsys, "actions", DATA / "z2.json", DATA / "z2_action.json", "--roundtrip")[0] == 0
    code, out, _ = run(capsys, "actions", DATA / "z2.json", DATA / "z2_action_tampered.json")
    data = json.loads(out)
    assert code == 1
    pa2 = [v for v in data["violations"] if v["axiom"] == "partial/PA2"]
    assert pa2 and pa2[0]["witness"] == ["a", "a"]


def test_crossed(capsys):
    code, out, _ = run(capsys, "crossed", DATA / "z2.json", DATA / "z2_action.json", "--cstar")
    data = json.loads(out)
    assert code == 0
    assert data["info"]["function-algebra/iso/dim_L_mod_N"] == 3
    assert data["info"]["cstar/dimension"] == 3


def test_reps(capsys):
    assert run(capsys, "reps", DATA / "z2.json", "--rep", DATA / "z2_rep.json", "--triangle")[0] == 0
    assert run(capsys, "reps", DATA / "g1.json", "--action", DATA / "g1_action.json",
               "--triangle")[0] == 0
    assert run(capsys, "reps", DATA / "g1.json")[0] == 2


def test_reps_triangle_failure_is_reported(tmp_path, capsys):
    spec = {"dim": 1, "pi": {g: [[[1, 0]]] for g in ["g", "g^-1", "e", "f"]}}
    p = tmp_path / "rep.json"
    p.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "reps", DATA / "g1.json", "--rep", p, "--triangle")
    assert code == 1 and "c/multiplicative" in json.loads(out)["checked"]


def test_export_table(capsys, tmp_path):
    out_path = tmp_path / "t.csv"
    assert run(capsys, "--output", out_path, "export-table", DATA / "z2.json")[0] == 0
    rows = list(csv.reader(io.StringIO(out_path.read_text())))
    assert rows[0] == ["", "[a]", "[e]", "ε(a)[e]"]
    assert rows[1][1] == "ε(a)[e]"
    code, out, _ = run(capsys, "export-table", DATA / "g1.json", "--what", "groupoid")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][1:] == ["e", "f", "g", "g^-1"] and rows[1][3] == ""


def test_determinism(capsys):
    args = ("--seed", "5", "crossed", DATA / "g1.json", DATA / "g1_action.json", "--cstar",
            "--trials", "50")
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("EXEL_SGPD_THREADS", "0")
    assert run(capsys, "validate", DATA / "g1.json")[0] == 2
    monkeypatch.setenv("EXEL_SGPD_THREADS", "3")
    code, out, _ = run(capsys, "validate", DATA / "g1.json")
    assert code == 0 and json.loads(out)["threads"] == 3


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["validate", "--nope", str(DATA / "g1.json")])
    assert info.value.code == 2
