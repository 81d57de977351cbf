"""End-to-end acceptance gate.

Each test times one criterion, checks it against an independent route where
one exists, and logs a single PASS/FAIL line shown in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations, permutations

import pytest

from gallai_ramsey.canon import canonical_form, enumerate_colorings
from gallai_ramsey.classify import balance_partition, classify_p4, classify_p5
from gallai_ramsey.coloring import EdgeColoring
from gallai_ramsey.construct import (
    PackingSpec,
    build_cyclic_three,
    build_disjoint_union_plus_green,
    build_matching_k4,
    build_three_block,
    build_two_block,
    paley_coloring,
)
from gallai_ramsey.detect import (
    contains_connected_super,
    find_mono_embedding,
    find_rainbow_path,
    validate_embedding,
)
from gallai_ramsey.pattern import complete, cycle, parse_pattern, path
from gallai_ramsey.search import (
    RamseyQuery,
    compute_number,
    decide_arrowing,
    naive_oracle,
    oracle_grid,
    validate_witness,
)
from gallai_ramsey.suites import case_holds, sample_rainbow_p5_free

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(request, number, title, limit=None):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        bound = f" (limit {limit}s)" if limit is not None else ""
        request.config._acceptance_lines.append(
            f"criterion {number}: {status} {title} [{elapsed:.2f}s{bound}]")


def naive_rainbow(g, length):
    for seq in permutations(range(g.n), length):
        if len({g.color(seq[i], seq[i + 1]) for i in range(length - 1)}) == length - 1:
            return True
    return False


def naive_mono_clique(g, r):
    return any(len({g.color(a, b) for a, b in combinations(vs, 2)}) == 1
               for vs in combinations(range(g.n), r))


def has_two_disjoint(edges):
    return any(not set(a) & set(b) for a, b in combinations(edges, 2))


# frozen from an independent union-find orbit count (see test_canon)
CLASSES_K4_6 = 25
CLASSES_K5_10 = 1299


def test_1_rainbow_p4_structure_k4(request):
    with criterion(request, 1, "rainbow-P4 structure on K4, <= 6 colors", 1.0):
        gs = list(enumerate_colorings(4, 6))
        assert len(gs) == CLASSES_K4_6
        for g in gs:
            label = classify_p4(g)
            assert (label.case == "NONE") == naive_rainbow(g, 4)
            assert label.case in ("A", "B", "NONE") and case_holds(g, label)


def test_2_rainbow_p5_structure_k5(request):
    with criterion(request, 2, "rainbow-P5 structure on K5, <= 10 colors", 30.0):
        count = 0
        for g in enumerate_colorings(5, 10):
            count += 1
            label = classify_p5(g)
            assert (label.case == "NONE") == naive_rainbow(g, 5)
            assert label.case in ("A", "B", "C", "D", "E", "F", "NONE") and case_holds(g, label)
        assert count == CLASSES_K5_10


def test_3_gallai_p4_p3(request):
    with criterion(request, 3, "gr_k(P4:P3) = 5 for k = 3, 4", 5.0):
        target = canonical_form(build_matching_k4(), True)
        for k in (3, 4):
            q = RamseyQuery.gallai(4, path(3), k)
            low = decide_arrowing(4, q)
            assert low.holds is False and validate_witness(low.witness, q)
            assert canonical_form(low.witness, True) == target
            assert decide_arrowing(5, q).holds is True
            assert compute_number(q).value == 5


def test_4_small_ramsey_numbers(request):
    with criterion(request, 4, "R_3(P3) = 5 and R_2(P3) = 3", 5.0):
        r3 = compute_number(RamseyQuery.classical(path(3), 3))
        r2 = compute_number(RamseyQuery.classical(path(3), 2))
        assert (r3.value, r2.value) == (5, 3)
        # independent route: brute force one step either side
        assert naive_oracle(4, RamseyQuery.classical(path(3), 3)).holds is False
        assert naive_oracle(2, RamseyQuery.classical(path(3), 2)).holds is False
        assert naive_oracle(3, RamseyQuery.classical(path(3), 2)).holds is True


def _no_mono(g, expr, colors=None):
    return find_mono_embedding(g, parse_pattern(expr), colors=colors) is None


def test_5_construction_battery(request):
    with criterion(request, 5, "construction validation battery", 60.0):
        m4 = build_matching_k4()
        assert find_rainbow_path(m4, 4) is None and _no_mono(m4, "P3")
        for m in (2, 3):
            tri = build_three_block((3 * m - 1, 3 * m - 1, m - 1))
            pent = build_three_block((5 * m - 1, 5 * m - 1, m - 1))
            assert (tri.n, pent.n) == (7 * m - 3, 11 * m - 3)
            assert _no_mono(tri, f"{m}K3") and _no_mono(pent, f"{m}C5")
        for m, n in ((1, 1), (2, 1), (2, 2)):
            g = build_two_block(5 * m - 1, n - 1)
            assert contains_connected_super(g, PackingSpec(cycle(5), m, True), colors=[1]) is None
            assert _no_mono(g, f"{n}K2" if n > 1 else "K2", colors=[2])
        assert _no_mono(build_cyclic_three(5), "2K3")
        union = build_disjoint_union_plus_green(paley_coloring(5), 2, 1)
        assert union.n == 11 and _no_mono(union, "2K3")


def test_6_connected_pentagon_vs_edge(request):
    with criterion(request, 6, "set-Ramsey C(C5) vs K2 = 5", 1.0):
        q = RamseyQuery.set_ramsey(PackingSpec(cycle(5), 1, True), PackingSpec(complete(2)))
        res = compute_number(q)
        assert res.value == 5 and validate_witness(res.witness, q) and res.witness.n == 4
        assert naive_oracle(4, q).holds is False and naive_oracle(5, q).holds is True


def test_7_search_matches_brute_force(request):
    with criterion(request, 7, "search agrees with brute force on the full grid", 600.0):
        grid = oracle_grid(max_n=5, max_k=3, patterns=("P3", "P4", "K3", "2K2"))
        assert len(grid) == 180
        bad = []
        for n, q in grid:
            fast, slow = decide_arrowing(n, q), naive_oracle(n, q)
            if fast.holds != slow.holds or (fast.holds is False and not validate_witness(fast.witness, q)):
                bad.append((n, q))
        assert not bad


def test_8_partition_balancing(request):
    with criterion(request, 8, "balance_partition matches exhaustive search"):
        rng = random.Random(8)
        for _ in range(1000):
            sizes = [rng.randint(1, 30) for _ in range(rng.randint(1, 12))]
            total = sum(sizes)
            best = min((2 * sum(sizes[i] for i in u) - total, u)
                       for r in range(1, len(sizes) + 1)
                       for u in combinations(range(len(sizes)), r)
                       if 2 * sum(sizes[i] for i in u) >= total)
            split = balance_partition(sizes)
            assert (split.deficiency, split.chosen) == best
            if len(split.chosen) >= 2:
                assert 2 * split.size_a2 >= split.size_a1


def _check_connected_packing(g, hit):
    comp = set(hit.component)
    used = set()
    for emb in hit.packing:
        assert validate_embedding(g, emb) and emb.color == 1
        assert set(emb.host_vertices) <= comp and not set(emb.host_vertices) & used
        used |= set(emb.host_vertices)
    # the component is connected in red
    seen, stack = {min(comp)}, [min(comp)]
    while stack:
        u = stack.pop()
        for v in comp - seen:
            if g.color(u, v) == 1:
                seen.add(v)
                stack.append(v)
    assert seen == comp


def test_9_k11_sampling(request):
    with criterion(request, 9, "10^4 random 2-colorings of K11 hold red C(2C5) or blue 2K2", 300.0):
        rng = random.Random(9)
        red = PackingSpec(cycle(5), 2, True)
        # blue graphs without 2K2 are stars or a triangle; cover them all first
        blues = [set()] + [{(0, j) for j in range(1, t + 1)} for t in range(1, 11)] + [{(0, 1), (0, 2), (1, 2)}]
        for blue in blues:
            g = EdgeColoring.from_function(11, lambda u, v: 2 if (u, v) in blue else 1, 2)
            assert not has_two_disjoint(g.edges_of_color(2))
            hit = contains_connected_super(g, red, colors=[1])
            assert hit is not None
            _check_connected_packing(g, hit)
        reached_red = 0
        for _ in range(10_000):
            p = rng.random()
            g = EdgeColoring(11, 2, tuple(1 if rng.random() < p else 2 for _ in range(55)))
            if has_two_disjoint(g.edges_of_color(2)):
                continue
            reached_red += 1
            hit = contains_connected_super(g, red, colors=[1])
            assert hit is not None, g.to_text()
            _check_connected_packing(g, hit)
        assert reached_red > 0


def test_10_forced_monochromatic_cliques(request):
    with criterion(request, 10, "cases C-F force a monochromatic K_{n-3} (n = 5, 6)"):
        special = 0
        for g in enumerate_colorings(5, 10):
            label = classify_p5(g, all_cases=True)
            if label.case != "NONE" and set(label.all_cases) & set("CDEF"):
                special += 1
                assert naive_mono_clique(g, 2)
        assert special > 0
        special = 0
        for g in sample_rainbow_p5_free(6, 10_000, random.Random(10)):
            label = classify_p5(g, all_cases=True)
            assert label.case != "NONE"
            if set(label.all_cases) & set("CDEF"):
                special += 1
                assert naive_mono_clique(g, 3)
        assert special > 1000
