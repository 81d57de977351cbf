"""Structure recognisers for colorings without short rainbow paths.

Without a rainbow P4 (n >= 4) a coloring uses at most two colors, or it is
the 3-coloring of K4 by perfect matchings.  Without a rainbow P5 (n >= 5)
one of six shapes A-F holds after renumbering the colors:

A. at most three colors;
B. a dominant color: the vertex sets touched by every other color are
   pairwise disjoint;
C. deleting one vertex leaves a monochromatic clique;
D. special v1, v2, v3 with E(2) = {v1v2}, E(3) = {v1v3}, E(4) holding
   v2v3 and possibly edges at v1, everything else color 1;
E. special v1..v4 with {v1v2} <= E(2) <= {v1v2, v3v4}, E(3) = {v1v3, v2v4},
   E(4) = {v1v4, v2v3}, everything else color 1;
F. one specific 4-coloring of K5.

The recognisers also carry the recoloring and partition-balancing steps
used when reducing a dominant-color coloring to three colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from .coloring import EdgeColoring
from .detect import find_rainbow_path

P5_ORDER = ("A", "B", "C", "D", "E", "F")

# Case F on vertices 0..4 (v1..v5): color classes 1, 2, 3, 4.
CASE_F_CLASSES = (
    ((0, 3), (0, 4), (1, 2)),
    ((1, 3), (1, 4), (0, 2)),
    ((2, 3), (2, 4), (0, 1)),
    ((3, 4),),
)


class PreconditionError(ValueError):
    """The coloring is too small for the requested structure statement."""


class UnclassifiedColoring(RuntimeError):
    """A rainbow-free coloring matched none of the cases; a counterexample."""

    def __init__(self, g: EdgeColoring, theorem: str):
        self.coloring = g
        super().__init__(f"rainbow-{theorem}-free coloring matched no case:\n{g.to_text()}")


@dataclass(frozen=True)
class DominantPartition:
    dominant: int
    parts: tuple[tuple[int, ...], ...]
    part_colors: tuple[int | None, ...]
    appended: tuple[int, ...] = ()

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def is_valid(self, g: EdgeColoring) -> bool:
        where = {}
        for i, part in enumerate(self.parts):
            for v in part:
                if v in where:
                    return False
                where[v] = i
        if len(where) != g.n:
            return False
        for u, v, c in g.edges():
            if where[u] != where[v]:
                if c != self.dominant:
                    return False
            elif c not in (self.dominant, self.part_colors[where[u]]):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "dominant": self.dominant,
            "parts": [list(p) for p in self.parts],
            "part_colors": list(self.part_colors),
            "appended": list(self.appended),
        }


@dataclass(frozen=True)
class BalancedSplit:
    chosen: tuple
    size_a1: int
    size_a2: int
    a1: frozenset | None = None
    a2: frozenset | None = None

    @property
    def deficiency(self) -> int:
        return self.size_a1 - self.size_a2


@dataclass(frozen=True)
class CaseLabel:
    theorem: str
    case: str
    renumbering: tuple[int, ...] = ()
    witness: dict = field(default_factory=dict, compare=False)
    all_cases: tuple[str, ...] | None = None

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "case": self.case, "renumbering": list(self.renumbering)}
        out.update(self.witness)
        if self.all_cases is not None:
            out["all_cases"] = list(self.all_cases)
        return out


def _rest(used, first):
    return [c for c in used if c not in first]


def _rainbow_label(theorem, emb):
    return CaseLabel(theorem, "NONE", (), {
        "rainbow_path": {"vertices": list(emb.host_vertices), "colors": list(emb.edge_colors)},
    })


# -- rainbow P4 ------------------------------------------------------------------------

def _p4_matching_witness(g):
    if g.n != 4 or len(g.used_colors) != 3:
        return None
    classes = []
    for c in g.used_colors:
        es = g.edges_of_color(c)
        if len(es) != 2 or set(es[0]) & set(es[1]):
            return None
        classes.append([list(e) for e in es])
    return {"matchings": classes}


def classify_p4(g: EdgeColoring, all_cases: bool = False) -> CaseLabel:
    """Recognise the structure of a coloring of K_n (n >= 4) with no rainbow P4."""
    if g.n < 4:
        raise PreconditionError("structure of rainbow-P4-free colorings needs n >= 4")
    emb = find_rainbow_path(g, 4)
    if emb is not None:
        return _rainbow_label("P4", emb)
    used = g.used_colors
    found = []
    if len(used) <= 2:
        found.append(("A", tuple(used), {"colors": list(used)}))
    w = _p4_matching_witness(g)
    if w is not None:
        found.append(("B", tuple(used), w))
    if not found:
        raise UnclassifiedColoring(g, "P4")
    case, ren, wit = found[0]
    return CaseLabel("P4", case, ren, wit, tuple(f[0] for f in found) if all_cases else None)


# -- rainbow P5 ------------------------------------------------------------------------

def dominant_partition(g: EdgeColoring) -> DominantPartition | None:
    """Try each used color as dominant; return the first that works.

    Vertices touched by no non-dominant color are appended to the first
    part and listed in ``appended``.
    """
    used = g.used_colors
    touched = {c: g.vertices_of_color(c) for c in used}
    for d in used:
        others = [c for c in used if c != d]
        ok = all(not (touched[a] & touched[b]) for a, b in combinations(others, 2))
        if not ok:
            continue
        if not others:
            return DominantPartition(d, (tuple(range(g.n)),), (None,))
        covered = set().union(*(touched[c] for c in others))
        loose = tuple(v for v in range(g.n) if v not in covered)
        parts = [sorted(touched[c]) for c in others]
        parts[0] = sorted(parts[0] + list(loose))
        return DominantPartition(d, tuple(tuple(p) for p in parts), tuple(others), loose)
    return None


def _case_c(g):
    m = g.matrix
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        c = m[rest[0]][rest[1]]
        if all(m[a][b] == c for a, b in combinations(rest, 2)):
            return (c,) + tuple(_rest(g.used_colors, (c,))), {"vertex": v}
    return None


def _case_d(g):
    m, n = g.matrix, g.n
    size = {c: len(g.edges_of_color(c)) for c in g.used_colors}
    if len(g.used_colors) != 4:
        return None
    for v1 in range(n):
        for v2, v3 in combinations([x for x in range(n) if x != v1], 2):
            c2, c3, c4 = m[v1][v2], m[v1][v3], m[v2][v3]
            if len({c2, c3, c4}) < 3 or size[c2] != 1 or size[c3] != 1:
                continue
            w = next(x for x in range(n) if x not in (v1, v2, v3))
            c1 = m[v2][w]
            if c1 in (c2, c3, c4):
                continue
            special = {(v1, v2), (v1, v3), (v2, v3)}
            ok = True
            for a, b in combinations(range(n), 2):
                if (a, b) in special or (b, a) in special:
                    continue
                c = m[a][b]
                if c == c1 or (c == c4 and v1 in (a, b)):
                    continue
                ok = False
                break
            if ok:
                return (c1, c2, c3, c4), {"vertices": [v1, v2, v3]}
    return None


def _case_e(g):
    m, n = g.matrix, g.n
    if len(g.used_colors) != 4:
        return None
    size = {c: len(g.edges_of_color(c)) for c in g.used_colors}
    for v1, v2, v3, v4 in permutations(range(n), 4):
        c2, c3, c4 = m[v1][v2], m[v1][v3], m[v1][v4]
        if len({c2, c3, c4}) < 3:
            continue
        if m[v2][v4] != c3 or m[v2][v3] != c4 or size[c3] != 2 or size[c4] != 2:
            continue
        c34 = m[v3][v4]
        if size[c2] != (2 if c34 == c2 else 1):
            continue
        special = {frozenset(p) for p in ((v1, v2), (v1, v3), (v1, v4), (v2, v3), (v2, v4), (v3, v4))}
        others = [m[a][b] for a, b in combinations(range(n), 2) if frozenset((a, b)) not in special]
        c1 = others[0]
        if c1 in (c2, c3, c4) or any(c != c1 for c in others):
            continue
        if c34 not in (c1, c2):
            continue
        return (c1, c2, c3, c4), {"vertices": [v1, v2, v3, v4]}
    return None


def _case_f(g):
    if g.n != 5 or len(g.used_colors) != 4:
        return None
    m = g.matrix
    for p in permutations(range(5)):
        cols = []
        for cls in CASE_F_CLASSES:
            cs = {m[p[a]][p[b]] for a, b in cls}
            if len(cs) != 1:
                break
            cols.append(cs.pop())
        else:
            if len(set(cols)) == 4:
                return tuple(cols), {"vertices": list(p)}
    return None


def classify_p5(g: EdgeColoring, all_cases: bool = False) -> CaseLabel:
    """Recognise which of cases A-F a rainbow-P5-free coloring satisfies.

    Reports the first matching case in A..F order, or NONE with a rainbow
    path when one exists.  ``all_cases`` also lists every matching case.
    """
    if g.n < 5:
        raise PreconditionError("structure of rainbow-P5-free colorings needs n >= 5")
    emb = find_rainbow_path(g, 5)
    if emb is not None:
        return _rainbow_label("P5", emb)
    used = g.used_colors
    found = []

    def add(case, hit):
        if hit is not None:
            found.append((case,) + hit)
        return bool(found) and not all_cases

    if add("A", (tuple(used), {"colors": list(used)}) if len(used) <= 3 else None):
        return _label(found, all_cases)
    dp = dominant_partition(g)
    hit = None
    if dp is not None:
        ren = (dp.dominant,) + tuple(c for c in dp.part_colors if c is not None)
        hit = (ren, dp.to_json())
    if add("B", hit):
        return _label(found, all_cases)
    for case, fn in (("C", _case_c), ("D", _case_d), ("E", _case_e), ("F", _case_f)):
        if add(case, fn(g)):
            return _label(found, all_cases)
    if not found:
        raise UnclassifiedColoring(g, "P5")
    return _label(found, all_cases)


def _label(found, all_cases):
    case, ren, wit = found[0]
    return CaseLabel("P5", case, ren, wit, tuple(f[0] for f in found) if all_cases else None)


# -- recoloring and balancing -------------------------------------------------------------

def merge_colors(g: EdgeColoring, grouping: dict) -> EdgeColoring:
    """Recolor by ``grouping`` (old color -> new color); classes only merge."""
    missing = [c for c in g.used_colors if c not in grouping]
    if missing:
        raise ValueError(f"grouping does not cover used colors {missing}")
    return g.recolor(grouping, k=max(grouping[c] for c in g.used_colors))


def balance_partition(part_sizes) -> BalancedSplit:
    """Choose parts U so A1 (their union) is at least A2 (the rest) with |A1|-|A2| minimal.

    Exact over all subsets; ties go to the lexicographically smallest sorted
    index tuple.  ``chosen`` holds part indices.
    """
    sizes = [int(s) for s in part_sizes]
    p = len(sizes)
    if p == 0:
        raise ValueError("balance_partition needs at least one part")
    if p > 20:
        raise ValueError("balance_partition enumerates subsets exactly; at most 20 parts")
    total = sum(sizes)
    sums = np.zeros(1, dtype=np.int64)
    for s in sizes:
        sums = np.concatenate([sums, sums + s])
    # bit i of the mask <-> part i
    defi = 2 * sums - total
    valid = np.flatnonzero(defi >= 0)
    valid = valid[valid > 0] if total > 0 else valid
    best = defi[valid].min()
    ties = valid[defi[valid] == best]
    chosen = min(tuple(i for i in range(p) if mask >> i & 1) for mask in ties.tolist())
    a1 = sum(sizes[i] for i in chosen)
    return BalancedSplit(chosen, a1, total - a1)


def balanced_split(dp: DominantPartition) -> BalancedSplit:
    """Balance a dominant partition; ``chosen`` holds part colors, a1/a2 vertex sets."""
    base = balance_partition(dp.sizes())
    a1 = frozenset(v for i in base.chosen for v in dp.parts[i])
    a2 = frozenset(v for part in dp.parts for v in part) - a1
    return BalancedSplit(tuple(dp.part_colors[i] for i in base.chosen), len(a1), len(a2), a1, a2)


def three_color_grouping(g: EdgeColoring, dp: DominantPartition, chosen) -> dict:
    """Dominant color -> 1, chosen part colors -> 2, all remaining colors -> 3."""
    chosen = set(chosen)
    out = {}
    for c in g.used_colors:
        out[c] = 1 if c == dp.dominant else (2 if c in chosen else 3)
    return out


def two_color_grouping(g: EdgeColoring, dp: DominantPartition) -> dict:
    """Dominant color -> 2, every other color -> 1."""
    return {c: 2 if c == dp.dominant else 1 for c in g.used_colors}
