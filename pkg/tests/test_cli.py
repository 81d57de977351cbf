import json
import random
import subprocess
import sys

import pytest

from gallai_ramsey.cli import main, parse_packing_spec, parse_rainbow
from gallai_ramsey.coloring import EdgeColoring, parse_coloring
from gallai_ramsey.construct import build_matching_k4
from gallai_ramsey.detect import find_rainbow_path


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("GALLAI_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def write(tmp_path, g, name="g.cg1"):
    p = tmp_path / name
    p.write_text(g.to_text())
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_matching(capsys):
    code, out, _ = run(capsys, "construct", "matching-k4")
    assert code == 0
    assert parse_coloring(out) == build_matching_k4()
    claims = json.loads(out.split("# claims ", 1)[1])
    assert claims["construction"] == "matching-k4" and claims["order"] == 4


def test_construct_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "three-block-k3", "--m", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and parse_coloring(data["coloring"]).n == 11 and data["params"] == {"m": 2}
    code, out, _ = run(capsys, "construct", "matching-k4", "--format", "dot")
    assert out.startswith("// claims ") and "graph G {" in out
    fig = tmp_path / "fig.png"
    code, _, _ = run(capsys, "construct", "matching-k4", "--figure", str(fig))
    assert code == 0 and fig.read_bytes()[:4] == b"\x89PNG"


def test_construct_output_parses_back(capsys, tmp_path):
    out_path = tmp_path / "c.cg1"
    assert run(capsys, "construct", "connected-c5", "--m", "2", "--out", str(out_path))[0] == 0
    g = parse_coloring(out_path.read_text())
    code, out, _ = run(capsys, "detect", str(out_path), "--csuper", "C5:2")
    assert g.n == 19 and code == 0 and json.loads(out) == {"result": "absent"}


def test_classify_matching_p4(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", write(tmp_path, build_matching_k4()), "--theorem", "p4")
    assert code == 0 and json.loads(out)["case"] == "B"


def test_classify_random_rainbow(capsys, tmp_path):
    rng = random.Random(42)
    while True:
        g = EdgeColoring(6, 5, tuple(rng.randint(1, 5) for _ in range(15)))
        if find_rainbow_path(g, 5) is not None:
            break
    code, out, _ = run(capsys, "classify", "--in", write(tmp_path, g))
    data = json.loads(out)
    assert code == 2 and data["case"] == "NONE"
    assert len(data["rainbow_path"]["vertices"]) == 5


def test_classify_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(EdgeColoring.monochromatic(5).to_text()))
    code, out, _ = run(capsys, "classify", "-", "--all-cases")
    assert code == 0 and json.loads(out)["case"] == "A"


def test_detect(capsys, tmp_path):
    mono = write(tmp_path, EdgeColoring.monochromatic(6, 3))
    assert run(capsys, "detect", mono, "--mono", "2K3")[0] == 2
    assert run(capsys, "detect", mono, "--mono", "K3", "--color", "1")[0] == 0
    code, out, _ = run(capsys, "detect", mono, "--mono", "K3", "--color", "3")
    assert code == 2 and json.loads(out)["embedding"]["color"] == 3
    m = write(tmp_path, build_matching_k4(), "m.cg1")
    assert run(capsys, "detect", m, "--rainbow", "P4")[0] == 0
    assert run(capsys, "detect", m, "--rainbow", "P3")[0] == 2


@pytest.mark.parametrize("argv, fragment", [
    (["ramsey", "--H", "K", "--k", "2"], "position 1"),
    (["detect", "missing.cg1", "--mono", "K3"], "missing.cg1"),
    (["construct", "nope"], "unknown preset"),
    (["verify", "no-such-suite"], "no-such-suite"),
    (["ramsey", "--H", "K3", "--k", "2", "--max-n", "20"], "cap"),
    (["gallai", "--H", "P3", "--k", "3", "--rainbow", "Q5"], "rainbow"),
])
def test_errors_exit_one(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:") and fragment in err


def test_bad_coloring_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.cg1"
    p.write_text("colored-graph v1\nn=3 k=2\n0 1 1\n0 1 2\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 1 and "line 4" in err


def test_detect_needs_one_target(capsys, tmp_path):
    code, _, err = run(capsys, "detect", write(tmp_path, build_matching_k4()))
    assert code == 1 and "exactly one" in err


def test_numbers(capsys):
    code, out, _ = run(capsys, "gallai", "--rainbow", "P4", "--H", "P3", "--k", "3")
    data = json.loads(out)
    assert code == 0 and data["value"] == 5 and "wall_time" not in data["stats"]
    assert parse_coloring(data["witness"]).n == 4
    code, out, _ = run(capsys, "ramsey", "--H", "P3", "--k", "3", "--format", "cg1")
    assert code == 0 and parse_coloring(out).n == 4
    code, out, _ = run(capsys, "set-ramsey", "--red", "C(C5)", "--blue", "K2", "--timings")
    data = json.loads(out)
    assert code == 0 and data["value"] == 5 and "wall_time" in data["stats"]


def test_budget_bracket(capsys):
    code, out, err = run(capsys, "ramsey", "--H", "K3", "--k", "3", "--max-n", "9",
                         "--node-budget", "1000", "--no-cache")
    data = json.loads(out)
    assert code == 2 and data["value"] is None and data["bracket"][1] is None
    assert "exhausted" in err


def test_cache_is_used(capsys, isolated_cache):
    run(capsys, "ramsey", "--H", "P4", "--k", "2")
    files = list(isolated_cache.rglob("*.json"))
    assert len(files) == 1
    data = json.loads(files[0].read_text())
    data["stats"]["nodes"] = -7
    files[0].write_text(json.dumps(data))
    _, out, _ = run(capsys, "ramsey", "--H", "P4", "--k", "2")
    assert json.loads(out)["stats"]["nodes"] == -7
    _, out, _ = run(capsys, "ramsey", "--H", "P4", "--k", "2", "--no-cache")
    assert json.loads(out)["stats"]["nodes"] > 0


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "gallai", "--H", "2K2", "--k", "3", "--no-cache")[1] for _ in range(2)}
    assert len(outs) == 1
    outs = {run(capsys, "verify", "thm-2.1-n4")[1] for _ in range(2)}
    assert len(outs) == 1


def test_verify_report_dir(capsys, tmp_path):
    rep = tmp_path / "rep"
    code, out, _ = run(capsys, "verify", "thm-2.1-n4", "--report-dir", str(rep))
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "suite\tcheck\tresult\tdetail"
    assert all(line.split("\t")[2] == "PASS" for line in lines[1:])
    assert (rep / "verify.tsv").read_text() == out
    pngs = sorted(p.name for p in rep.glob("*.png"))
    assert pngs and all(p.startswith("thm-2-1-n4--") for p in pngs)


def test_parsers():
    assert parse_rainbow("P5") == 5
    spec = parse_packing_spec("C(2C5)")
    assert spec.connected_super and spec.multiplicity == 2 and spec.base.n == 5
    spec = parse_packing_spec("2K2")
    assert not spec.connected_super and spec.multiplicity == 2
    spec = parse_packing_spec("K3+P3")
    assert spec.multiplicity == 1 and spec.base.n == 6


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gallai_ramsey", "construct", "matching-k4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("colored-graph v1")
