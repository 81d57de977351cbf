"""Arrowing decisions and Ramsey-type numbers by exhaustive search.

``decide_arrowing(n, q)`` asks whether every coloring of K_n with at most
``q.k`` colors contains one of the query's targets.  The search assigns
edge colors in lexicographic edge order and abandons a branch as soon as
the colored prefix already contains a target.  Two symmetry rules cut the
tree without losing any target-free coloring:

* the colors on the edges at vertex 0 are non-decreasing (vertices
  1..n-1 are interchangeable);
* when every color carries the same target, a new color may only be the
  smallest unused one.

A budget on search nodes turns an oversized search into an explicit
UNDECIDED answer.  :func:`naive_oracle` enumerates every raw coloring and
shares no pruning with the search, for cross-checking.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from .coloring import EdgeColoring
from .construct import PackingSpec
from .detect import (
    _popcount,
    _rainbow_path,
    _search,
    color_components,
    contains_connected_super,
    find_mono_embedding,
    find_rainbow_path,
    packing_in_component,
)
from .pattern import Pattern

DEFAULT_NODE_BUDGET = 10**8
NAIVE_LIMIT = 10**8
SPLIT_DEPTH = 6
MAX_SEARCH_ORDER = 16


class SearchLimitError(ValueError):
    """A query exceeds a hard size guard (not the node budget)."""


@dataclass(frozen=True)
class RamseyQuery:
    """What every coloring must contain.

    ``targets[i]`` is the target for color ``i + 1``.  For ``gallai``
    queries a rainbow path on ``rainbow`` vertices also counts.
    """

    kind: str
    k: int
    targets: tuple[PackingSpec, ...]
    rainbow: int | None = None
    n_min: int = 1
    n_max: int = 7

    def __post_init__(self):
        if self.kind not in ("classical", "set_ramsey", "gallai"):
            raise ValueError(f"unknown query kind {self.kind!r}")
        if len(self.targets) != self.k:
            raise ValueError("need exactly one target per color")
        if self.kind == "set_ramsey" and self.k != 2:
            raise ValueError("set-Ramsey queries use two colors")
        if self.kind == "gallai" and self.rainbow not in (3, 4, 5, 6):
            raise ValueError("gallai queries need a rainbow path of 3..6 vertices")
        if self.kind != "gallai" and self.rainbow is not None:
            raise ValueError("only gallai queries take a rainbow target")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("bad search window")
        if self.n_max > MAX_SEARCH_ORDER:
            raise SearchLimitError(f"n_max={self.n_max} exceeds search cap {MAX_SEARCH_ORDER}")

    @classmethod
    def classical(cls, h: Pattern, k: int, n_min: int = 1, n_max: int = 7) -> "RamseyQuery":
        return cls("classical", k, (PackingSpec(h),) * k, None, n_min, n_max)

    @classmethod
    def gallai(cls, rainbow: int, h: Pattern, k: int, n_min: int = 1, n_max: int = 7) -> "RamseyQuery":
        return cls("gallai", k, (PackingSpec(h),) * k, rainbow, n_min, n_max)

    @classmethod
    def set_ramsey(cls, first: PackingSpec, second: PackingSpec, n_min: int = 1,
                   n_max: int = 7) -> "RamseyQuery":
        return cls("set_ramsey", 2, (first, second), None, n_min, n_max)

    @property
    def colors_symmetric(self) -> bool:
        return all(t == self.targets[0] for t in self.targets)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "targets": [
                {"pattern": str(t.base), "edges": sorted(map(list, t.base.edges)), "order": t.base.n,
                 "multiplicity": t.multiplicity, "connected_super": t.connected_super}
                for t in self.targets
            ],
            "rainbow": self.rainbow,
            "n_min": self.n_min,
            "n_max": self.n_max,
        }

    def key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass
class Decision:
    """``holds`` is True (arrows), False (``witness`` avoids every target) or None (undecided)."""

    holds: bool | None
    witness: EdgeColoring | None = None
    nodes: int = 0


@dataclass
class RamseyResult:
    value: int | None
    bracket: tuple[int, int | None] | None = None
    witness: EdgeColoring | None = None
    stats: dict = field(default_factory=dict)

    def to_json(self, query: RamseyQuery | None = None) -> dict:
        out = {
            "query": query.to_json() if query is not None else None,
            "value": self.value,
            "witness": self.witness.to_text() if self.witness is not None else None,
            "stats": self.stats,
        }
        if self.bracket is not None:
            out["bracket"] = list(self.bracket)
        return out


# -- target checks on full colorings ------------------------------------------------------

def coloring_hits_target(g: EdgeColoring, q: RamseyQuery) -> bool:
    """Does the complete coloring ``g`` contain one of the query's targets?"""
    if q.rainbow is not None and find_rainbow_path(g, q.rainbow) is not None:
        return True
    for c, spec in enumerate(q.targets, start=1):
        if spec.connected_super:
            if contains_connected_super(g, spec, colors=[c]) is not None:
                return True
        elif find_mono_embedding(g, spec.pattern, colors=[c]) is not None:
            return True
    return False


def validate_witness(g: EdgeColoring, q: RamseyQuery) -> bool:
    return g.k <= q.k and not coloring_hits_target(g, q)


# -- incremental search ---------------------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


class _Solver:
    def __init__(self, n: int, q: RamseyQuery, budget: int):
        self.n = n
        self.q = q
        self.budget = budget
        self.nodes = 0
        self.edges = list(combinations(range(n), 2))
        self.colors = [0] * len(self.edges)
        self.matrix = [[0] * n for _ in range(n)]
        self.adj = [[0] * n for _ in range(q.k + 1)]
        self.symmetric = q.colors_symmetric
        self.patterns = [t.pattern for t in q.targets]

    def _hits(self, u, v, c) -> bool:
        spec = self.q.targets[c - 1]
        adj = self.adj[c]
        if spec.connected_super:
            comp = next(x for x in color_components(adj) if x >> u & 1)
            need = spec.multiplicity * spec.base.n
            if _popcount(comp) >= need and packing_in_component(adj, spec.base, spec.multiplicity, comp) is not None:
                return True
        else:
            pat = self.patterns[c - 1]
            allowed = (1 << self.n) - 1
            if pat.is_connected:
                allowed = next(x for x in color_components(adj) if x >> u & 1)
            if _search(adj, pat, allowed) is not None:
                return True
        if self.q.rainbow is not None and _rainbow_path(self.matrix, self.n, self.q.rainbow) is not None:
            return True
        return False

    def _assign(self, i, c) -> bool:
        """Color edge i; return False (and undo) if a target appears."""
        u, v = self.edges[i]
        self.colors[i] = c
        self.matrix[u][v] = self.matrix[v][u] = c
        self.adj[c][u] |= 1 << v
        self.adj[c][v] |= 1 << u
        if self._hits(u, v, c):
            self._unassign(i)
            return False
        return True

    def _unassign(self, i):
        u, v = self.edges[i]
        c = self.colors[i]
        self.colors[i] = 0
        self.matrix[u][v] = self.matrix[v][u] = 0
        self.adj[c][u] &= ~(1 << v)
        self.adj[c][v] &= ~(1 << u)

    def _choices(self, i, top):
        u, v = self.edges[i]
        lo = 1
        if u == 0 and v >= 2:
            lo = self.colors[i - 1]
        hi = min(self.q.k, top + 1) if self.symmetric else self.q.k
        return range(lo, hi + 1)

    def _dfs(self, i, top, stop_depth=None, frontier=None):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if i == len(self.edges):
            return True
        if stop_depth is not None and i == stop_depth:
            frontier.append(tuple(self.colors[:i]))
            return False
        for c in self._choices(i, top):
            if self._assign(i, c):
                if self._dfs(i + 1, max(top, c), stop_depth, frontier):
                    return True
                self._unassign(i)
        return False

    def replay(self, prefix) -> bool:
        for i, c in enumerate(prefix):
            if not self._assign(i, c):
                return False
        return True

    def witness(self) -> EdgeColoring:
        return EdgeColoring(self.n, self.q.k, tuple(self.colors))

    def solve(self, prefix=()) -> Decision:
        if not self.replay(prefix):
            return Decision(True, None, self.nodes)
        top = max(prefix, default=0)
        try:
            found = self._dfs(len(prefix), top)
        except _BudgetExhausted:
            return Decision(None, None, self.nodes)
        if found:
            return Decision(False, self.witness(), self.nodes)
        return Decision(True, None, self.nodes)

    def frontier(self, depth):
        out = []
        self._dfs(0, 0, depth, out)
        return out


def _solve_subtree(args):
    n, q, budget, prefix = args
    return _Solver(n, q, budget).solve(prefix)


def decide_arrowing(n: int, q: RamseyQuery, node_budget: int = DEFAULT_NODE_BUDGET,
                    threads: int = 1) -> Decision:
    """Does every coloring of K_n with at most q.k colors contain a target?

    With ``threads > 1`` the tree is cut after :data:`SPLIT_DEPTH` edges and
    the subtrees run in worker processes, each with the full node budget;
    the answer and witness are the same as a sequential run.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        g = EdgeColoring(1, q.k, ())
        return Decision(False, g, 1) if not coloring_hits_target(g, q) else Decision(True, None, 1)
    edges = n * (n - 1) // 2
    if threads <= 1 or edges <= SPLIT_DEPTH:
        return _Solver(n, q, node_budget).solve()
    head = _Solver(n, q, node_budget)
    try:
        prefixes = head.frontier(SPLIT_DEPTH)
    except _BudgetExhausted:
        return Decision(None, None, head.nodes)
    nodes = head.nodes
    undecided = False
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for d in pool.map(_solve_subtree, [(n, q, node_budget, p) for p in prefixes]):
            nodes += d.nodes
            if d.holds is False:
                return Decision(False, d.witness, nodes)
            if d.holds is None:
                undecided = True
    return Decision(None if undecided else True, None, nodes)


def naive_oracle(n: int, q: RamseyQuery) -> Decision:
    """Brute force over all q.k^(n(n-1)/2) colorings, no symmetry, no pruning."""
    edges = n * (n - 1) // 2
    if q.k ** edges > NAIVE_LIMIT:
        raise SearchLimitError(f"{q.k}^{edges} colorings exceeds naive limit {NAIVE_LIMIT}")
    count = 0
    for cols in product(range(1, q.k + 1), repeat=edges):
        count += 1
        g = EdgeColoring(n, q.k, cols)
        if not coloring_hits_target(g, q):
            return Decision(False, g, count)
    return Decision(True, None, count)


def compute_number(q: RamseyQuery, node_budget: int = DEFAULT_NODE_BUDGET,
                   threads: int = 1) -> RamseyResult:
    """Smallest n in [q.n_min, q.n_max] at which every coloring contains a target.

    Relies on monotonicity: scanning upward, the first arrowing n is the
    answer and the last non-arrowing n supplies the extremal witness.
    Undecided or exhausted windows come back as a bracket ``[lo, hi]``
    (``hi`` None when no arrowing n was seen).
    """
    t0 = time.perf_counter()
    lo, hi = q.n_min, None
    witness = None
    per_n = {}
    total_nodes = 0
    for n in range(q.n_min, q.n_max + 1):
        d = decide_arrowing(n, q, node_budget, threads)
        total_nodes += d.nodes
        per_n[n] = {None: "undecided", True: "arrows", False: "avoidable"}[d.holds]
        if d.holds is True:
            hi = n
            break
        if d.holds is False:
            lo = n + 1
            witness = d.witness
    if hi is not None and lo == hi and hi > 1 and witness is None:
        d = decide_arrowing(hi - 1, q, node_budget, threads)
        total_nodes += d.nodes
        witness = d.witness
    stats = {"nodes": total_nodes, "wall_time": round(time.perf_counter() - t0, 6),
             "decisions": {str(k): v for k, v in per_n.items()}}
    if hi is not None and lo == hi:
        return RamseyResult(hi, None, witness, stats)
    return RamseyResult(None, (lo, hi), witness, stats)


def oracle_grid(max_n: int = 5, max_k: int = 3, patterns=("P3", "P4", "K3", "2K2")):
    """Every (n, query) pair on the equivalence grid: classical, P4-rainbow and P5-rainbow."""
    from .pattern import parse_pattern
    out = []
    for expr in patterns:
        h = parse_pattern(expr)
        for k in range(1, max_k + 1):
            qs = [RamseyQuery.classical(h, k), RamseyQuery.gallai(4, h, k), RamseyQuery.gallai(5, h, k)]
            for q in qs:
                for n in range(1, max_n + 1):
                    out.append((n, q))
    return out
