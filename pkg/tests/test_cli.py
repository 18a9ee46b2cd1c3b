import json
import subprocess
import sys

import pytest

from boxclique.cli import main


def test_profiles(tmp_path, capsys):
    assert main(["profiles", "--s", "4", "--v", "12", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "PASS  |L(4,12)|: 19" in out and "FAIL" not in out
    assert (tmp_path / "L_4_12.csv").read_text().count("\n") == 1 + 19
    man = json.loads((tmp_path / "profiles_manifest.json").read_text())
    assert [s["count"] for s in man["stages"]] == [19, 4]


def test_profiles_appendix(tmp_path, capsys):
    assert main(["profiles", "--s", "9", "--v", "13", "--check-appendix-b", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS  L(") == 12


def test_bad_arguments(tmp_path):
    with pytest.raises(SystemExit) as e:
        main(["profiles", "--s", "2", "--out", str(tmp_path)])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        main(["profiles", "--threads", "0", "--out", str(tmp_path)])
    with pytest.raises(SystemExit):
        main(["profiles", "--fixtures", str(tmp_path / "missing"), "--out", str(tmp_path)])


def test_pipeline_v13(tmp_path, capsys):
    assert main(["pipeline", "--v", "13", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "verdict v=13: no 13-clique" in out
    assert json.loads((tmp_path / "flat_13.json").read_text())["count"] == 0


def test_classify(tmp_path, capsys):
    assert main(["classify", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "NOTE  protoautomorphisms of example1: 3072" in out
    assert "FAIL" not in out
    rep = json.loads((tmp_path / "classify.json").read_text())
    assert rep["classes"]["total"] == 3
    assert (tmp_path / "chirality_spade.txt").read_text().count("\n") == 16
    assert (tmp_path / "adjacency_d1.csv").exists()


def test_classify_strict(tmp_path, capsys):
    assert main(["classify", "--strict", "--out", str(tmp_path)]) == 1
    assert "FAIL  protoautomorphisms of example1" in capsys.readouterr().out


@pytest.mark.parametrize("kind,target,name", [
    ("obj", "cq_clubs[0]", "cq_clubs_0.obj"),
    ("obj", "d1", "d1.obj"),
    ("json", "cq_spades[3]", "cq_spades_3.json"),
    ("json", "c2", "c2.json"),
    ("svg", "figure2", "figure2.svg"),
    ("svg", "diamond", "diamond.svg"),
])
def test_export(tmp_path, kind, target, name):
    assert main(["export", kind, target, "--out", str(tmp_path)]) == 0
    text = (tmp_path / name).read_text()
    if kind == "obj":
        assert text.count("\no box") == 12 and text.count("\nf ") == 72
    elif kind == "json":
        doc = json.loads(text)
        assert len(doc["boxes"]) == 12 and len(doc["adjacency"]) == 12
    else:
        assert text.startswith("<svg")


def test_export_obj_is_centred(tmp_path):
    main(["export", "obj", "example1", "--out", str(tmp_path)])
    vs = [tuple(map(float, l.split()[1:])) for l in (tmp_path / "example1.obj").read_text().splitlines()
          if l.startswith("v ")]
    for k in range(3):
        assert min(v[k] for v in vs) == -max(v[k] for v in vs)


def test_export_unknown(tmp_path, capsys):
    assert main(["export", "obj", "cq_clubs[64]", "--out", str(tmp_path)]) == 2
    assert main(["export", "svg", "nothing", "--out", str(tmp_path)]) == 2
    assert "unknown export target" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "boxclique", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "classify" in out.stdout
