import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gallai_ramsey.coloring import (
    DOT_PALETTE,
    ColoringFormatError,
    EdgeColoring,
    edge_index,
    edge_list,
    parse_coloring,
)
from gallai_ramsey.construct import build_matching_k4

MATCHING_TEXT = """colored-graph v1
n=4 k=3
0 1 1
2 3 1
0 2 2
1 3 2
0 3 3
1 2 3
"""


@st.composite
def colorings(draw, max_n=7, max_k=5):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    cols = draw(st.lists(st.integers(1, k), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return EdgeColoring(n, k, tuple(cols))


def test_smallest_complete_graph():
    g = parse_coloring("colored-graph v1\nn=2 k=1\n0 1 1\n")
    assert (g.n, g.k, g.colors) == (2, 1, (1,))
    assert g.color(1, 0) == 1


def test_matching_file_has_three_perfect_matchings():
    g = parse_coloring(MATCHING_TEXT)
    assert g == build_matching_k4()
    for c in (1, 2, 3):
        a, b = g.edges_of_color(c)
        assert not set(a) & set(b)
        assert g.vertices_of_color(c) == frozenset(range(4))


def test_missing_edge_reported_with_line():
    text = "colored-graph v1\nn=3 k=2\n0 1 1\n0 2 2\n"
    with pytest.raises(ColoringFormatError, match="missing edge 1 2") as info:
        parse_coloring(text)
    assert info.value.line == 4


@pytest.mark.parametrize("text, fragment, line", [
    ("colored graph\nn=2 k=1\n0 1 1\n", "malformed header", 1),
    ("colored-graph v1\nn=2\n0 1 1\n", "malformed header", 2),
    ("colored-graph v1\nn=2 k=1\n0 1 1\n0 1 1\n", "duplicate edge", 4),
    ("colored-graph v1\nn=2 k=1\n0 1 2\n", "color out of range", 3),
    ("colored-graph v1\nn=2 k=1\n1 0 1\n", "bad vertex pair", 3),
    ("colored-graph v1\nn=2 k=1\n0 1\n", "expected", 3),
])
def test_format_errors(text, fragment, line):
    with pytest.raises(ColoringFormatError, match=fragment) as info:
        parse_coloring(text)
    assert info.value.line == line


def test_comments_and_blank_lines_ignored():
    text = "# a comment\ncolored-graph v1  # header\n\nn=2 k=3\n0 1 3 # the only edge\n"
    assert parse_coloring(text) == EdgeColoring(2, 3, (3,))


def test_single_vertex():
    g = parse_coloring("colored-graph v1\nn=1 k=4\n")
    assert g.n == 1 and g.colors == () and g.used_colors == ()


def test_invalid_construction():
    with pytest.raises(ValueError):
        EdgeColoring(3, 2, (1, 2))
    with pytest.raises(ValueError):
        EdgeColoring(2, 2, (3,))
    with pytest.raises(ValueError):
        EdgeColoring(0, 1, ())


def test_edge_index_matches_lex_order():
    for n in range(1, 8):
        for i, (u, v) in enumerate(edge_list(n)):
            assert edge_index(u, v, n) == i == edge_index(v, u, n)


@settings(max_examples=150, deadline=None)
@given(colorings())
def test_text_round_trip(g):
    assert parse_coloring(g.to_text()) == g
    assert parse_coloring(g.to_text()).to_text() == g.to_text()


@settings(max_examples=100, deadline=None)
@given(colorings(), st.randoms(use_true_random=False))
def test_relabel_preserves_color_multiset(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.colors) == sorted(g.colors)
    for u, v, c in h.edges():
        assert g.color(perm[u], perm[v]) == c


@settings(max_examples=100, deadline=None)
@given(colorings())
def test_accessors_agree(g):
    assert set(g.used_colors) <= set(range(1, g.k + 1))
    for c in range(1, g.k + 1):
        es = g.edges_of_color(c)
        adj = g.adjacency(c)
        assert sum(bin(r).count("1") for r in adj) == 2 * len(es)
        assert g.vertices_of_color(c) == frozenset(x for e in es for x in e)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert g.matrix[u][v] == g.color(u, v)


def test_dot_palette_cycles():
    g = EdgeColoring.from_function(6, lambda u, v: edge_index(u, v, 6) % 14 + 1, 14)
    dot = g.to_dot()
    assert dot.startswith("graph G {")
    assert f'color="{DOT_PALETTE[0]}", label="13"' in dot
    assert f'color="{DOT_PALETTE[1]}", label="14"' in dot
    assert len(DOT_PALETTE) == 12


def test_helpers():
    g = EdgeColoring.monochromatic(4, 2)
    assert g.used_colors == (2,) and g.k == 2
    h = EdgeColoring.from_edge_classes(3, {1: [(0, 1)], 2: [(0, 2), (1, 2)]})
    assert h.colors == (1, 2, 2)
    with pytest.raises(ValueError, match="missing edge"):
        EdgeColoring.from_edge_classes(3, {1: [(0, 1)]})
    assert h.induced([2, 0]).colors == (2,)
    assert h.recolor({1: 1, 2: 1}).used_colors == (1,)
