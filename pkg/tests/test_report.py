import hashlib
from collections import Counter

from gallai_ramsey.coloring import DOT_PALETTE, EdgeColoring
from gallai_ramsey.construct import build_matching_k4
from gallai_ramsey.report import (
    PLOT_PALETTE,
    case_histogram,
    circle_layout,
    draw_coloring,
    slug,
    write_report,
)
from gallai_ramsey.suites import CheckRow, SuiteReport


def digest(path):
    return hashlib.md5(open(path, "rb").read()).hexdigest()


def test_palette_lengths_match():
    assert len(PLOT_PALETTE) == len(DOT_PALETTE)


def test_slug():
    assert slug("thm-2.1-n4") == "thm-2-1-n4"
    assert slug("K4, <= 6 colors") == "k4-6-colors"
    assert slug("***") == "figure"


def test_layout_on_unit_circle():
    for x, y in circle_layout(7):
        assert abs(x * x + y * y - 1) < 1e-12


def test_png_output_is_reproducible(tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    draw_coloring(build_matching_k4(), a, "matching")
    draw_coloring(build_matching_k4(), b, "matching")
    assert a.read_bytes()[:4] == b"\x89PNG" and digest(a) == digest(b)
    h1, h2 = tmp_path / "h1.png", tmp_path / "h2.png"
    case_histogram(Counter({"A": 5, "NONE": 100}), h1, "cases")
    case_histogram(Counter({"A": 5, "NONE": 100}), h2, "cases")
    assert digest(h1) == digest(h2)


def test_many_colors_and_large_orders(tmp_path):
    g = EdgeColoring.from_function(30, lambda u, v: (u + v) % 14 + 1, 14)
    assert str(draw_coloring(g, tmp_path / "big.png")).endswith("big.png")


def test_write_report(tmp_path):
    small = EdgeColoring.monochromatic(5)
    big = EdgeColoring.monochromatic(41)
    reps = [
        SuiteReport("s.one", [CheckRow("witness one", True, "ok", 0.1, small)], {"cases": Counter({"A": 3})}),
        SuiteReport("s.two", [CheckRow("too big", False, "bad", 0.2, big), CheckRow("none", True)]),
    ]
    written = write_report(reps, tmp_path / "out")
    names = sorted(p.rsplit("/", 1)[1] for p in map(str, written))
    assert names == ["s-one--cases.png", "s-one--witness-one.png", "verify.tsv"]
    tsv = (tmp_path / "out" / "verify.tsv").read_text().splitlines()
    assert tsv[0] == "suite\tcheck\tresult\tdetail"
    assert [line.split("\t")[2] for line in tsv[1:]] == ["PASS", "FAIL", "PASS"]
