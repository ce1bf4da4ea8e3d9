import json
import subprocess
import sys

import pytest

from rgcages import atlas
from rgcages.cli import main
from rgcages.formats import read_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_verify_robertson(capsys):
    code, out = run_json(capsys, "verify", "--claim", "robertson")
    assert code == 0 and out["passed"]
    assert out["reports"][0]["stats"]["equitable_search"]["exhausted"]


def test_verify_text(capsys):
    code, out = run(capsys, "verify", "--claim", "eq453", "--text")
    assert code == 0 and "PASS" in out


def test_construct_r33_writes_files(capsys, tmp_path):
    code, out = run_json(capsys, "construct", "r33", "--r", "5", "--out", str(tmp_path))
    assert code == 0 and out["order"] == 10
    assert read_graph(out["files"]["graph"]).n == 10
    cdata = json.loads((tmp_path / "r33-5.coloring.json").read_text())
    assert cdata["k"] == 3 and sorted(map(len, cdata["classes"])) == [3, 3, 4]
    assert json.loads((tmp_path / "r33-5.provenance.json").read_text())["case"] == "OddRHalfOdd"


def _verify_files(capsys, files, r, g, chi, equitable=False):
    argv = ["verify", "--input", files["graph"], "--coloring", files["coloring"], "--r", str(r), "--g", str(g),
            "--chi", str(chi)]
    if equitable:
        argv.append("--equitable")
    return run_json(capsys, *argv)


def test_construct_outputs_reverify(capsys, tmp_path):
    code, pg = run_json(capsys, "construct", "pg", "--q", "3", "--out", str(tmp_path))
    assert code == 0 and pg["order"] == 26
    src = pg["files"]["graph"]
    cases = [
        (("construct", "odd-girth", "--input", src, "--mode", "vertex"), (4, 5, 3), 25),
        (("construct", "glue", "--input", src), (4, 6, 3), 53),
        (("construct", "r33", "--r", "7"), (7, 3, 3), 12),
    ]
    for argv, (r, g, chi), n in cases:
        code, out = run_json(capsys, *argv, "--out", str(tmp_path))
        assert code == 0 and out["order"] == n
        code, rep = _verify_files(capsys, out["files"], r, g, chi)
        assert code == 0 and rep["passed"]


def test_construct_edge_and_triple(capsys, tmp_path):
    code, pg = run_json(capsys, "construct", "pg", "--q", "2", "--out", str(tmp_path))
    code, out = run_json(capsys, "construct", "odd-girth", "--input", pg["files"]["graph"], "--mode", "edge",
                         "--out", str(tmp_path))
    assert code == 0 and out["order"] == 12
    code, out = run_json(capsys, "construct", "triple", "--input", out["files"]["graph"], "--coloring",
                         out["files"]["coloring"], "--out", str(tmp_path))
    assert code == 0 and out["order"] == 36
    code, rep = _verify_files(capsys, out["files"], 3, 5, 3, equitable=True)
    assert code == 0


def test_construct_failure_exit_code(capsys, tmp_path):
    code, pg = run_json(capsys, "construct", "pg", "--q", "2", "--out", str(tmp_path))
    code, out = run_json(capsys, "construct", "odd-girth", "--input", pg["files"]["graph"], "--mode", "vertex",
                         "--out", str(tmp_path))
    assert code == 1 and "error" in out


def test_verify_failure_exit_code(capsys):
    code, out = run_json(capsys, "verify", "--input", str(atlas.DATA_DIR / "petersen.g6"), "--r", "3", "--g", "6",
                         "--chi", "3")
    assert code == 1 and not out["passed"]


def test_color_mcgee_equitable(capsys):
    code, out = run_json(capsys, "color", "--input", str(atlas.DATA_DIR / "mcgee.g6"), "--k", "3", "--equitable")
    assert code == 0 and sorted(out["census"]) == [8, 8, 8]


def test_color_failures(capsys):
    code, out = run_json(capsys, "color", "--input", str(atlas.DATA_DIR / "robertson.g6"), "--k", "3",
                         "--equitable")
    assert code == 1
    code, out = run_json(capsys, "color", "--input", str(atlas.DATA_DIR / "robertson.g6"), "--k", "3",
                         "--equitable", "--node-limit", "3")
    assert code == 3
    code, out = run_json(capsys, "color", "--input", str(atlas.DATA_DIR / "petersen.g6"), "--k", "2")
    assert code == 1


def test_search(capsys):
    code, out = run_json(capsys, "search", "min-order", "--r", "3", "--g", "3", "--chi", "3", "--max-n", "8")
    assert code == 0 and out["order"] == 6
    code, out = run_json(capsys, "search", "min-order", "--r", "3", "--g", "6", "--chi", "3", "--max-n", "8")
    assert code == 1 and out["order"] is None
    code, out = run_json(capsys, "search", "min-order", "--r", "4", "--g", "5", "--chi", "3", "--max-n", "12",
                         "--node-limit", "10")
    assert code == 3 and out["inconclusive"]


def test_atlas_commands(capsys):
    code, out = run_json(capsys, "atlas", "list")
    assert code == 0 and len(out) == 7
    code, out = run_json(capsys, "atlas", "list", "--equitable")
    assert "robertson" not in {e["name"] for e in out}
    code, out = run_json(capsys, "atlas", "get", "robertson")
    assert code == 0 and out["order"] == 19
    code, _ = run(capsys, "atlas", "get", "tutte")
    assert code == 2


def test_export_formats(capsys, tmp_path):
    src = str(atlas.DATA_DIR / "petersen.g6")
    code, out = run(capsys, "export", "--input", src, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 10 and len(data["edges"]) == 15
    p = tmp_path / "p.json"
    p.write_text(out)
    code, g6 = run(capsys, "export", "--input", str(p), "--format", "g6")
    assert g6.strip() == (atlas.DATA_DIR / "petersen.g6").read_text().strip()
    code, dot = run(capsys, "export", "--input", src, "--format", "dot")
    assert code == 0 and dot.count("--") == 15


def test_export_dot_with_coloring(capsys, tmp_path):
    e = atlas.load("petersen")
    cpath = tmp_path / "c.json"
    cpath.write_text(json.dumps({"k": 3, "classes": [list(c) for c in e.colorings[0][1].classes()]}))
    code, dot = run(capsys, "export", "--input", str(atlas.DATA_DIR / "petersen.g6"), "--format", "dot",
                    "--coloring", str(cpath))
    assert code == 0 and dot.startswith("graph") and dot.count("fillcolor") == 10


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["verify", "--bogus"],
    ["verify"],
    ["construct", "r33"],
    ["construct", "pg", "--q", "6"],
    ["color", "--input", "/nonexistent.g6", "--k", "3"],
    ["search", "min-order", "--r", "1", "--g", "3", "--chi", "3", "--max-n", "5"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_identical_invocations_identical_bytes(tmp_path):
    def once(d):
        cmd = [sys.executable, "-m", "rgcages", "--seedless", "construct", "r33", "--r", "9", "--out", str(d)]
        out = subprocess.run(cmd, capture_output=True, check=True).stdout
        return out.replace(str(d).encode(), b""), {p.name: p.read_bytes() for p in d.iterdir()}

    a, b = tmp_path / "a", tmp_path / "b"
    assert once(a) == once(b)
    v = [sys.executable, "-m", "rgcages", "verify", "--claim", "robertson"]
    assert subprocess.run(v, capture_output=True).stdout == subprocess.run(v, capture_output=True).stdout
