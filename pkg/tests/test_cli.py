import json
import subprocess
import sys

import pytest

from sharpgenus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_realize_json(capsys):
    code, out, _ = run(capsys, "realize", "5", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["sigma"] == [1, 2] and data["genus"] == 1


def test_realize_not_realized(capsys):
    code, out, _ = run(capsys, "realize", "7", "1")
    assert code == 1
    assert "not realized" in out


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "21")
    assert code == 0
    assert "nonsharp: 15" in out and "sharp: 13" in out


@pytest.mark.parametrize("argv,code", [
    (["cm", "check", "1,2,4"], 0),
    (["cm", "check", "2,2"], 1),
    (["cm", "check", "3,1"], 2),
    (["cm", "enum", "7", "--length", "3"], 1),
    (["cm", "enum", "5", "--allow-zeros"], 2),
    (["cm", "enum", "5", "--length", "3", "--allow-zeros"], 0),
    (["cm", "change", "1,2,4", "5"], 0),
    (["cm", "change", "1,2,4", "8"], 2),
    (["alex", "validate", "-1,1"], 0),
    (["alex", "validate", "-2,1"], 1),
    (["alex", "validate", "1,-1,2"], 1),
    (["alex", "torsion", "1,-1,1", "1"], 0),
    (["alex", "torus", "2", "4"], 2),
    (["alex", "cable-genus", "2", "11", "1"], 0),
    (["alex", "cable-genus", "2", "4", "1"], 2),
    (["dinv", "unknot", "5", "1"], 0),
    (["dinv", "unknot", "5", "9"], 2),
    (["dinv", "surgery", "5", "0", "-1,1"], 0),
    (["dinv", "surgery", "5", "0", "-2,1"], 1),
    (["dinv", "lemma-c", "1,2", "-1,1"], 0),
    (["dinv", "lemma-c", "1,2", "1,-1,1"], 1),
    (["dinv", "lemma-c", "1,2", "-1,1", "--box", "0"], 2),
    (["family", "3"], 0),
    (["family", "0"], 2),
    (["gt", "18"], 0),
    (["gt", "1"], 2),
    (["realize", "6", "2"], 2),
    (["bogus"], 2),
    ([], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_rationals_are_exact(capsys):
    _, out, _ = run(capsys, "dinv", "surgery", "5", "1", "-1,1", "--json")
    data = json.loads(out)
    assert data["d"] == "1/5" and data["d_unknot"] == "1/5"
    _, out, _ = run(capsys, "dinv", "unknot", "5", "0", "--json")
    assert json.loads(out)["d"] == "1/1"


def test_lemma_c_json(capsys):
    _, out, _ = run(capsys, "dinv", "lemma-c", "1,2", "-1,1", "--json")
    data = json.loads(out)
    assert data["obstructed"] is False
    assert sorted(data["witnesses"]) == ["0", "1", "2", "3", "4"]
    assert all(w is not None for w in data["witnesses"].values())


CORPUS = [
    ["cm", "check", "1,1,3"], ["cm", "enum", "20"], ["cm", "change", "1,1,1,1,1", "3"],
    ["alex", "validate", "1,-1,1"], ["alex", "torsion", "1,-1,1"], ["alex", "torus", "3", "5"],
    ["alex", "cable-genus", "2", "3", "0"], ["dinv", "unknot", "7", "2"],
    ["dinv", "surgery", "9", "4", "1,-1,1"], ["dinv", "lemma-c", "1,2", "1,-1,1"],
    ["bounds", "100"], ["family", "4"], ["realize", "7", "3"], ["realize", "7", "1"],
    ["gt", "20"],
]


@pytest.mark.parametrize("argv", CORPUS, ids=lambda a: " ".join(a))
def test_json_round_trip(capsys, argv):
    _, out, _ = run(capsys, *argv, "--json")
    assert json.dumps(json.loads(out), sort_keys=True) + "\n" == out


@pytest.mark.parametrize("argv", CORPUS, ids=lambda a: " ".join(a))
def test_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert run(capsys, *argv, "--csv")[1] == run(capsys, *argv, "--csv")[1]


def test_csv_single_record(capsys):
    _, out, _ = run(capsys, "realize", "7", "3", "--csv")
    header, row = out.splitlines()
    assert header.split(",")[:5] == ["p", "q", "weights", "realized", "verdict"]
    assert row.startswith("7,3,3;2;2,true,realized,1;1;1;2,1,")


def test_scan_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "scan", "7", "--csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "p,q,weights,realized,sigma,genus,berge_ok"
    assert "7,3,3;2;2,true,1;1;1;2,1,true" in lines
    _, jsonl, _ = run(capsys, "scan", "7", "--json")
    target = tmp_path / "scan.jsonl"
    run(capsys, "scan", "7", "--json", "--workers", "2", "--out", str(target))
    assert target.read_text() == jsonl
    _, human, _ = run(capsys, "scan", "7")
    assert "(5,1)" in human.splitlines()[-1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sharpgenus", "bounds", "21", "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout) == {"nonsharp": 15, "p": 21, "sharp": 13}
