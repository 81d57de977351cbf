import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gallai_ramsey import cache
from gallai_ramsey.construct import PackingSpec, build_matching_k4
from gallai_ramsey.coloring import EdgeColoring
from gallai_ramsey.pattern import complete, cycle, parse_pattern, path
from gallai_ramsey.search import (
    RamseyQuery,
    RamseyResult,
    SearchLimitError,
    compute_number,
    decide_arrowing,
    naive_oracle,
    oracle_grid,
    validate_witness,
)

SMALL = ["P2", "P3", "P4", "K3", "2K2", "K_{1,3}"]


def test_two_color_triangle_number():
    res = compute_number(RamseyQuery.classical(complete(3), 2))
    assert res.value == 6
    assert res.witness.n == 5 and validate_witness(res.witness, RamseyQuery.classical(complete(3), 2))
    assert res.stats["decisions"]["6"] == "arrows"


def test_single_color_edge():
    assert decide_arrowing(2, RamseyQuery.classical(path(2), 1)).holds is True
    assert compute_number(RamseyQuery.classical(path(2), 1)).value == 2


def test_small_classical_numbers():
    assert compute_number(RamseyQuery.classical(path(3), 2)).value == 3
    assert compute_number(RamseyQuery.classical(path(3), 3)).value == 5
    assert compute_number(RamseyQuery.classical(path(4), 2)).value == 5


def test_gallai_p4_p3_three_colors():
    q = RamseyQuery.gallai(4, path(3), 3)
    d = decide_arrowing(4, q)
    assert d.holds is False and validate_witness(d.witness, q)
    assert compute_number(q).value == 5
    # the matching K4 is the natural witness
    assert validate_witness(build_matching_k4(), q)


def test_naive_examples():
    q = RamseyQuery.gallai(4, path(3), 3)
    d = naive_oracle(4, q)
    assert d.holds is False and validate_witness(d.witness, q)
    assert naive_oracle(3, RamseyQuery.classical(complete(3), 1)).holds is True
    with pytest.raises(SearchLimitError):
        naive_oracle(8, RamseyQuery.classical(complete(3), 3))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(SMALL), st.integers(1, 3), st.integers(1, 5), st.sampled_from([None, 3, 4, 5]))
def test_search_agrees_with_naive(expr, k, n, rainbow):
    h = parse_pattern(expr)
    q = RamseyQuery.classical(h, k) if rainbow is None else RamseyQuery.gallai(rainbow, h, k)
    if k ** (n * (n - 1) // 2) > 60000:
        n = 4
    fast, slow = decide_arrowing(n, q), naive_oracle(n, q)
    assert fast.holds == slow.holds
    if fast.holds is False:
        assert validate_witness(fast.witness, q) and fast.witness.n == n


def test_monotone_in_n():
    for expr in ("P3", "2K2", "K3"):
        q = RamseyQuery.classical(parse_pattern(expr), 2)
        seen = [decide_arrowing(n, q).holds for n in range(1, 8)]
        first = seen.index(True)
        assert all(seen[first:]) and not any(seen[:first])


def test_set_ramsey_connected_pentagon_vs_edge():
    q = RamseyQuery.set_ramsey(PackingSpec(cycle(5), 1, True), PackingSpec(complete(2)))
    res = compute_number(q)
    assert res.value == 5 and validate_witness(res.witness, q)


def test_threads_give_same_answer():
    q = RamseyQuery.classical(complete(3), 2)
    one = decide_arrowing(5, q, threads=1)
    two = decide_arrowing(5, q, threads=2)
    assert one.holds is two.holds is False
    assert one.witness == two.witness
    assert decide_arrowing(6, q, threads=2).holds is True


def test_budget_gives_undecided_and_bracket():
    q = RamseyQuery.classical(complete(3), 3, n_max=9)
    assert decide_arrowing(8, q, node_budget=100).holds is None
    res = compute_number(q, node_budget=1000)
    assert res.value is None and res.bracket[1] is None
    assert "undecided" in res.stats["decisions"].values()
    assert res.to_json(q)["bracket"] == list(res.bracket)


def test_query_validation():
    with pytest.raises(SearchLimitError):
        RamseyQuery.classical(complete(3), 2, n_max=17)
    with pytest.raises(ValueError):
        RamseyQuery.gallai(7, path(3), 3)
    with pytest.raises(ValueError):
        RamseyQuery("classical", 2, (PackingSpec(path(3)),))
    with pytest.raises(ValueError):
        RamseyQuery.classical(path(3), 2, n_min=5, n_max=4)
    with pytest.raises(ValueError):
        decide_arrowing(0, RamseyQuery.classical(path(3), 2))


def test_query_key_is_stable_json():
    q = RamseyQuery.gallai(5, parse_pattern("2K2"), 3)
    data = json.loads(q.key())
    assert data["kind"] == "gallai" and data["rainbow"] == 5 and len(data["targets"]) == 3
    assert q.key() == RamseyQuery.gallai(5, parse_pattern("2K2"), 3).key()
    assert q.key() != RamseyQuery.gallai(4, parse_pattern("2K2"), 3).key()


@pytest.mark.parametrize("expr, expected", [("P3", 5), ("2K2", 6)])
def test_rainbow_does_not_help_small_targets(expr, expected):
    h = parse_pattern(expr)
    assert compute_number(RamseyQuery.classical(h, 3)).value == expected
    assert compute_number(RamseyQuery.gallai(5, h, 4)).value == expected


def test_oracle_grid_shape():
    grid = oracle_grid()
    assert len(grid) == 4 * 3 * 3 * 5
    kinds = {(q.kind, q.rainbow) for _, q in grid}
    assert kinds == {("classical", None), ("gallai", 4), ("gallai", 5)}


def test_cache_round_trip(tmp_path):
    q = RamseyQuery.classical(path(3), 3)
    res = compute_number(q)
    path_ = cache.store(q, res, root=str(tmp_path))
    back = cache.load(q, root=str(tmp_path))
    assert back.value == res.value and back.witness == res.witness
    # tamper with the witness: it now contains a monochromatic P3
    data = json.loads(open(path_).read())
    data["witness"] = EdgeColoring.monochromatic(4).to_text()
    with open(path_, "w") as fh:
        json.dump(data, fh)
    assert cache.load(q, root=str(tmp_path)) is None
    other = RamseyQuery.classical(path(3), 2)
    assert cache.load(other, root=str(tmp_path)) is None


def test_cache_skips_undecided(tmp_path):
    q = RamseyQuery.classical(complete(3), 3, n_max=9)
    res = RamseyResult(None, (8, None), None, {"decisions": {"8": "undecided"}})
    assert cache.store(q, res, root=str(tmp_path)) is None


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("GALLAI_CACHE_DIR", str(tmp_path))
    assert cache.cache_dir() == str(tmp_path)


def test_random_witnesses_validate():
    rng = random.Random(3)
    for _ in range(10):
        h = parse_pattern(rng.choice(SMALL[1:]))
        k = rng.randint(2, 3)
        q = RamseyQuery.classical(h, k, n_max=8)
        res = compute_number(q, node_budget=10**6)
        if res.witness is not None:
            assert validate_witness(res.witness, q)
