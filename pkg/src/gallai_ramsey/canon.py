"""Canonical labelling and isomorph-free enumeration of edge colorings.

:func:`canonical_form` works one coloring at a time: ordered-partition
refinement on color degrees, then individualization with backtracking.
Vertices that are twins (same color to every other vertex) are branched on
once per twin class, because swapping twins is an automorphism.

:func:`enumerate_colorings` grows representatives one vertex at a time and
deduplicates each level with a vectorised key: the lexicographic minimum,
over all vertex permutations, of the permuted color string (renumbered by
first occurrence when colors are interchangeable).
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

import numpy as np

from .coloring import EdgeColoring, edge_index

DEFAULT_ENUM_CAP = 7


class EnumerationCapError(ValueError):
    pass


# -- single-coloring canonical form ----------------------------------------------

def _refine(matrix, cells, symmetric):
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        ncell = len(cells)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                counts = {}
                row = matrix[v]
                for w in range(len(row)):
                    if w != v:
                        key = (row[w], where[w])
                        counts[key] = counts.get(key, 0) + 1
                if symmetric:
                    per_color = {}
                    for (c, i), cnt in counts.items():
                        per_color.setdefault(c, [0] * ncell)[i] = cnt
                    sig = tuple(sorted(tuple(x) for x in per_color.values()))
                else:
                    sig = tuple(sorted(counts.items()))
                sigs.setdefault(sig, []).append(v)
            for sig in sorted(sigs):
                new_cells.append(sigs[sig])
        if len(new_cells) == ncell:
            return new_cells
        cells = new_cells


def _leaf_string(matrix, order, symmetric):
    n = len(order)
    out = []
    rename = {}
    for i in range(n):
        row = matrix[order[i]]
        for j in range(i + 1, n):
            c = row[order[j]]
            if symmetric:
                c = rename.setdefault(c, len(rename) + 1)
            out.append(c)
    return tuple(out)


def _twin_ids(matrix):
    n = len(matrix)
    tid = list(range(n))
    for u in range(n):
        if tid[u] != u:
            continue
        for v in range(u + 1, n):
            if tid[v] == v and all(matrix[u][w] == matrix[v][w] for w in range(n) if w != u and w != v):
                tid[v] = u
    return tid


def canonical_labeling(g: EdgeColoring, color_symmetric: bool = False):
    """Return (canonical color string, vertex order achieving it)."""
    matrix = g.matrix
    n = g.n
    twins = _twin_ids(matrix)
    best = [None, None]

    def search(cells):
        cells = _refine(matrix, cells, color_symmetric)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            s = _leaf_string(matrix, order, color_symmetric)
            if best[0] is None or s < best[0]:
                best[0], best[1] = s, order
            return
        cell = cells[target]
        tried = set()
        for v in cell:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    return best[0], best[1]


def canonical_form(g: EdgeColoring, color_symmetric: bool = False) -> bytes:
    """Key equal for two colorings iff they differ by a vertex permutation
    (and, with ``color_symmetric``, a renaming of colors).

    The palette size ``k`` is not part of the key.
    """
    s, _ = canonical_labeling(g, color_symmetric)
    tag = "s" if color_symmetric else "f"
    return f"{tag}{g.n}:".encode() + ",".join(map(str, s)).encode()


# -- batch keys ----------------------------------------------------------------------

def _edge_perms(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = []
    for p in permutations(range(n)):
        out.append([edge_index(p[u], p[v], n) for u, v in pairs])
    return np.asarray(out, dtype=np.intp).reshape(-1, len(pairs))


def _renumber(block, ncolors):
    """Relabel each row's colors by order of first occurrence (0-based)."""
    rows, cols = block.shape
    mapping = np.full((rows, ncolors), -1, dtype=np.int16)
    counter = np.zeros(rows, dtype=np.int16)
    out = np.empty_like(block)
    r = np.arange(rows)
    for j in range(cols):
        v = block[:, j]
        cur = mapping[r, v]
        fresh = cur < 0
        mapping[r[fresh], v[fresh]] = counter[fresh]
        counter[fresh] += 1
        out[:, j] = mapping[r, v]
    return out


def _lexmin(a, b):
    diff = a != b
    first = diff.argmax(axis=1)
    r = np.arange(a.shape[0])
    take_b = diff[r, first] & (b[r, first] < a[r, first])
    a[take_b] = b[take_b]
    return a


def batch_keys(rows: np.ndarray, n: int, symmetric: bool, ncolors: int) -> np.ndarray:
    """Orbit-minimum key of every row (0-based colors, lexicographic edge order)."""
    if rows.shape[1] == 0:
        return rows.copy()
    best = None
    for pe in _edge_perm_cache(n):
        cand = rows[:, pe]
        if symmetric:
            cand = _renumber(cand, ncolors)
        best = cand.copy() if best is None else _lexmin(best, cand)
    return best


_PERM_CACHE: dict[int, np.ndarray] = {}


def _edge_perm_cache(n):
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = _edge_perms(n)
    return _PERM_CACHE[n]


def _dedupe(rows, n, symmetric, ncolors, chunk=20000):
    keys = []
    for start in range(0, rows.shape[0], chunk):
        keys.append(batch_keys(rows[start:start + chunk], n, symmetric, ncolors))
    allk = np.concatenate(keys) if keys else rows
    return np.unique(allk, axis=0)


def _extensions(n_old, used, max_colors, symmetric):
    """All color vectors for the n_old new edges at the added vertex."""
    if not symmetric:
        return np.array(list(product(range(max_colors), repeat=n_old)), dtype=np.int16).reshape(-1, n_old)
    out = []

    def rec(prefix, top):
        if len(prefix) == n_old:
            out.append(tuple(prefix))
            return
        for c in range(min(top + 1, max_colors)):
            prefix.append(c)
            rec(prefix, max(top, c + 1))
            prefix.pop()

    rec([], used)
    return np.array(out, dtype=np.int16).reshape(-1, n_old)


def representative_rows(n: int, max_colors: int, color_symmetric: bool = True,
                        cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """Sorted array of orbit-minimum keys (0-based colors), one row per class."""
    if n > cap:
        raise EnumerationCapError(f"n={n} exceeds enumeration cap {cap}")
    if n < 1 or max_colors < 1:
        raise ValueError("need n >= 1 and max_colors >= 1")
    reps = np.zeros((1, 0), dtype=np.int16)
    for m in range(2, n + 1):
        e_new = m * (m - 1) // 2
        old_pos = [edge_index(u, v, m) for u in range(m - 1) for v in range(u + 1, m - 1)]
        new_pos = [edge_index(u, m - 1, m) for u in range(m - 1)]
        blocks = []
        for rep in reps:
            used = int(rep.max()) + 1 if rep.size else 0
            ext = _extensions(m - 1, used, max_colors, color_symmetric)
            block = np.empty((ext.shape[0], e_new), dtype=np.int16)
            block[:, old_pos] = rep
            block[:, new_pos] = ext
            blocks.append(block)
        cand = np.concatenate(blocks)
        reps = _dedupe(cand, m, color_symmetric, max(max_colors, e_new))
    return reps


def enumerate_colorings(n: int, max_colors: int, color_symmetric: bool = True,
                        cap: int = DEFAULT_ENUM_CAP, shard: tuple[int, int] = (0, 1)
                        ) -> Iterator[EdgeColoring]:
    """One representative per class of colorings of K_n with at most ``max_colors`` colors.

    Classes are up to vertex permutation, and also color renaming when
    ``color_symmetric``.  ``shard=(i, s)`` yields only representatives whose
    position in the (deterministic) stream is congruent to i mod s, so
    disjoint shards can be consumed independently.
    """
    index, count = shard
    if not 0 <= index < count:
        raise ValueError("shard index out of range")
    reps = representative_rows(n, max_colors, color_symmetric, cap)
    k = max_colors
    for i in range(index, reps.shape[0], count):
        yield EdgeColoring(n, k, tuple(int(c) + 1 for c in reps[i]))


def count_colorings(n: int, max_colors: int, color_symmetric: bool = True,
                    cap: int = DEFAULT_ENUM_CAP) -> int:
    return int(representative_rows(n, max_colors, color_symmetric, cap).shape[0])
