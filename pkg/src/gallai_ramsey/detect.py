"""Rainbow paths, monochromatic embeddings and disjoint packings.

Host graphs are bitset adjacency rows (``adj[u] >> v & 1``).  Embedding
search maps pattern vertices one at a time, components largest first, each
component in BFS order so every non-root step is constrained by the images
of already-placed neighbours.  Two exact reductions keep the search small
on the block-structured colorings this package builds:

* twins: host vertices with identical neighbourhoods (open or closed) are
  interchangeable, so at each step only the first candidate of every twin
  class is tried;
* repeated components: the root image of each copy of a repeated component
  must exceed the root image of the previous copy.

Both keep the lexicographically first solution reachable, so the search is
still complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .coloring import EdgeColoring
from .pattern import Pattern, copies

MAX_BASE_ORDER = 12
MAX_PACKING_ORDER = 64


class PackingCapError(ValueError):
    """Raised when a packing query exceeds the supported size."""


@dataclass(frozen=True)
class Embedding:
    pattern: Pattern
    host_vertices: tuple[int, ...]
    color: int | None = None
    edge_colors: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"pattern": str(self.pattern), "vertices": list(self.host_vertices)}
        if self.color is not None:
            out["color"] = self.color
        if self.edge_colors is not None:
            out["edge_colors"] = list(self.edge_colors)
        return out


class ConnectedPacking(NamedTuple):
    color: int
    component: tuple[int, ...]
    packing: list[Embedding]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- search plan ---------------------------------------------------------------

@lru_cache(maxsize=512)
def _plan(pattern: Pattern):
    """Steps (pattern vertex, earlier adjacent steps, degree, repeated-root step)."""
    comps = list(pattern._component_sets)
    shapes = [pattern.subpattern(c) for c in comps]
    idx = sorted(range(len(comps)), key=lambda i: (-len(comps[i]), -shapes[i].size, i))
    steps = []
    pos = {}
    prev_root_of_shape = {}
    for i in idx:
        comp = comps[i]
        root = max(comp, key=lambda v: (pattern.degrees[v], -v))
        order, seen = [root], {root}
        for u in order:
            for v in comp:
                if v not in seen and pattern.adjacency[u] >> v & 1:
                    seen.add(v)
                    order.append(v)
        shape = shapes[i]
        for j, pv in enumerate(order):
            back = tuple(pos[q] for q in order[:j] if pattern.adjacency[pv] >> q & 1)
            rep = prev_root_of_shape.get(shape) if j == 0 else None
            pos[pv] = len(steps)
            steps.append((pv, back, pattern.degrees[pv], rep))
        prev_root_of_shape[shape] = pos[order[0]]
    return tuple(steps)


def _twin_classes(radj, allowed):
    """Map vertex -> twin-class id within the allowed set."""
    by_open, by_closed = {}, {}
    for v in _bits(allowed):
        by_open.setdefault(radj[v], []).append(v)
        by_closed.setdefault(radj[v] | (1 << v), []).append(v)
    cls = {}
    for group in by_open.values():
        if len(group) > 1:
            for v in group:
                cls[v] = ("o", group[0])
    for group in by_closed.values():
        for v in group:
            cls.setdefault(v, ("c", group[0]))
    return cls


def _search(adj, pattern: Pattern, allowed: int):
    """Return a list img (pattern vertex -> host vertex) or None."""
    steps = _plan(pattern)
    total = len(steps)
    if total == 0:
        return []
    if _popcount(allowed) < total:
        return None
    radj = [row & allowed for row in adj]
    maxdeg = max(pattern.degrees)
    degmask = [allowed] * (maxdeg + 1)
    for d in range(1, maxdeg + 1):
        degmask[d] = sum(1 << v for v in _bits(allowed) if _popcount(radj[v]) >= d)
    twin = _twin_classes(radj, allowed)
    img = [0] * total

    def rec(t, used):
        if t == total:
            return True
        if _popcount(allowed & ~used) < total - t:
            return False
        _, back, deg, rep = steps[t]
        if back:
            cand = radj[img[back[0]]]
            for b in back[1:]:
                cand &= radj[img[b]]
        else:
            cand = allowed
        cand &= degmask[deg] & ~used
        if rep is not None:
            cand &= ~((2 << img[rep]) - 1)
        tried = set()
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            c = twin[v]
            if c in tried:
                continue
            tried.add(c)
            img[t] = v
            if rec(t + 1, used | low):
                return True
        return False

    if not rec(0, 0):
        return None
    mapping = [0] * pattern.n
    for (pv, *_), hv in zip(steps, img):
        mapping[pv] = hv
    return mapping


def _check_caps(base: Pattern, m: int):
    if base.n > MAX_BASE_ORDER:
        raise PackingCapError(f"base pattern order {base.n} exceeds cap {MAX_BASE_ORDER}")
    if m * base.n > MAX_PACKING_ORDER:
        raise PackingCapError(
            f"packing order {m}*{base.n}={m * base.n} exceeds cap {MAX_PACKING_ORDER}")


def find_embedding_in_graph(adj, pattern: Pattern, allowed: int | None = None):
    """Embed ``pattern`` into the bitset graph ``adj``; returns the vertex map or None."""
    if allowed is None:
        allowed = (1 << len(adj)) - 1
    if pattern.n > MAX_PACKING_ORDER:
        raise PackingCapError(f"pattern order {pattern.n} exceeds cap {MAX_PACKING_ORDER}")
    return _search(adj, pattern, allowed)


# -- public detectors --------------------------------------------------------------

def find_rainbow_path(g: EdgeColoring, length_vertices: int) -> Embedding | None:
    """A path on ``length_vertices`` vertices whose edges all differ in color, or None."""
    if not 2 <= length_vertices <= 6:
        raise ValueError("rainbow path length must be between 2 and 6 vertices")
    if g.n < length_vertices or len(g.used_colors) < length_vertices - 1:
        return None
    from .pattern import path
    found = _rainbow_path(g.matrix, g.n, length_vertices)
    if found is None:
        return None
    verts, cols = found
    return Embedding(path(length_vertices), tuple(verts), None, tuple(cols))


def _rainbow_path(m, n, length):
    """DFS over partial paths; color 0 in ``m`` means uncolored and is never used."""
    verts = []
    cols = []

    def rec(last, seen, colmask):
        if len(verts) == length:
            return True
        row = m[last]
        for w in range(n):
            if seen >> w & 1:
                continue
            c = row[w]
            if c == 0 or colmask >> c & 1:
                continue
            verts.append(w)
            cols.append(c)
            if rec(w, seen | (1 << w), colmask | (1 << c)):
                return True
            verts.pop()
            cols.pop()
        return False

    for s in range(n):
        verts.append(s)
        if rec(s, 1 << s, 0):
            return verts, cols
        verts.pop()
    return None


def find_mono_embedding(g: EdgeColoring, h: Pattern, colors=None) -> Embedding | None:
    """An embedding of ``h`` into one color class of ``g``, or None.

    Colors (all used colors unless ``colors`` is given) are tried in
    increasing order and the first witness is returned.
    """
    if h.n > g.n:
        return None
    if h.size == 0:
        return Embedding(h, tuple(range(h.n)), g.used_colors[0] if g.used_colors else 1)
    if h.n > MAX_PACKING_ORDER:
        raise PackingCapError(f"pattern order {h.n} exceeds cap {MAX_PACKING_ORDER}")
    full = (1 << g.n) - 1
    for c in (g.used_colors if colors is None else sorted(colors)):
        mapping = _search(g.adjacency(c), h, full)
        if mapping is not None:
            return Embedding(h, tuple(mapping), c)
    return None


def find_disjoint_packing(vertices, edges, base: Pattern, m: int) -> list[Embedding] | None:
    """``m`` vertex-disjoint copies of ``base`` in the graph (vertices, edges), or None."""
    if m < 1:
        raise ValueError("multiplicity must be at least 1")
    _check_caps(base, m)
    verts = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in edges:
        if u in pos and v in pos and u != v:
            adj[pos[u]] |= 1 << pos[v]
            adj[pos[v]] |= 1 << pos[u]
    mapping = _search(adj, copies(base, m), (1 << len(verts)) - 1)
    if mapping is None:
        return None
    return _split(mapping, base, m, verts)


def _split(mapping, base, m, names=None, color=None):
    out = []
    for i in range(m):
        chunk = mapping[i * base.n:(i + 1) * base.n]
        if names is not None:
            chunk = [names[v] for v in chunk]
        out.append(Embedding(base, tuple(chunk), color))
    return out


def color_components(adj, allowed: int | None = None) -> list[int]:
    """Connected components (as bitmasks) of a bitset graph, singletons included."""
    if allowed is None:
        allowed = (1 << len(adj)) - 1
    comps, left = [], allowed
    while left:
        low = left & -left
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= allowed
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        left &= ~comp
    return comps


def packing_in_component(adj, base: Pattern, m: int, comp: int):
    """Vertex map of ``m`` disjoint copies of ``base`` inside component ``comp``, or None."""
    return _search(adj, copies(base, m), comp)


def contains_connected_super(g: EdgeColoring, spec, colors=None) -> ConnectedPacking | None:
    """Find a color whose class has one component holding ``spec.multiplicity`` disjoint copies.

    This is exactly "some monochromatic connected supergraph of m copies of
    the base pattern exists".  ``colors`` restricts which color classes are
    examined (default: all used colors).
    """
    base, m = spec.base, spec.multiplicity
    _check_caps(base, m)
    need = m * base.n
    for c in (g.used_colors if colors is None else colors):
        adj = g.adjacency(c)
        for comp in color_components(adj):
            if _popcount(comp) < need:
                continue
            mapping = packing_in_component(adj, base, m, comp)
            if mapping is not None:
                members = tuple(_bits(comp))
                return ConnectedPacking(c, members, _split(mapping, base, m, color=c))
    return None


def validate_embedding(g: EdgeColoring, emb: Embedding) -> bool:
    """Edge-by-edge check of a witness, independent of the search code."""
    hv = emb.host_vertices
    p = emb.pattern
    if len(hv) != p.n or len(set(hv)) != len(hv):
        return False
    if any(not 0 <= v < g.n for v in hv):
        return False
    if emb.edge_colors is not None:
        if len(emb.edge_colors) != len(hv) - 1:
            return False
        for i in range(len(hv) - 1):
            if g.color(hv[i], hv[i + 1]) != emb.edge_colors[i]:
                return False
        return len(set(emb.edge_colors)) == len(emb.edge_colors)
    for u, v in p.edges:
        if g.color(hv[u], hv[v]) != emb.color:
            return False
    return True
