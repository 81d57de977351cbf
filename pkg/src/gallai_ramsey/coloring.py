"""Edge colorings of complete graphs.

An :class:`EdgeColoring` assigns one color in ``1..k`` to every pair of
vertices of ``K_n``.  Colors live in a flat tuple in upper-triangular,
row-major order: ``(0,1), (0,2), ..., (0,n-1), (1,2), ...``.

The text format ("colored-graph v1")::

    colored-graph v1
    n=4 k=3
    0 1 1
    0 2 2
    ...

``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

HEADER = "colored-graph v1"

# 12-entry palette for DOT export; colors beyond 12 cycle.
DOT_PALETTE = (
    "red", "blue", "green3", "orange", "purple", "brown",
    "magenta", "cyan4", "gold3", "gray40", "navy", "olivedrab",
)


class ColoringFormatError(ValueError):
    """Raised when colored-graph text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def edge_index(u: int, v: int, n: int) -> int:
    """Position of pair {u, v} in the flat upper-triangular array."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def edge_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class EdgeColoring:
    n: int
    k: int
    colors: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a coloring needs at least one vertex")
        if self.k < 1:
            raise ValueError("palette size must be at least 1")
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        expected = self.n * (self.n - 1) // 2
        if len(colors) != expected:
            raise ValueError(f"expected {expected} edge colors, got {len(colors)}")
        for c in colors:
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} outside 1..{self.k}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_function(cls, n: int, color_of, k: int | None = None) -> "EdgeColoring":
        colors = tuple(color_of(u, v) for u, v in combinations(range(n), 2))
        if k is None:
            k = max(colors, default=1)
        return cls(n, k, colors)

    @classmethod
    def from_matrix(cls, matrix, k: int | None = None) -> "EdgeColoring":
        n = len(matrix)
        return cls.from_function(n, lambda u, v: matrix[u][v], k)

    @classmethod
    def monochromatic(cls, n: int, color: int = 1, k: int | None = None) -> "EdgeColoring":
        k = color if k is None else k
        return cls(n, k, (color,) * (n * (n - 1) // 2))

    @classmethod
    def from_edge_classes(cls, n: int, classes: Mapping[int, Iterable[tuple[int, int]]],
                          k: int | None = None) -> "EdgeColoring":
        """Build from ``{color: [(u, v), ...]}``; every pair must be covered once."""
        flat = [0] * (n * (n - 1) // 2)
        for color, edges in classes.items():
            for u, v in edges:
                i = edge_index(u, v, n)
                if flat[i]:
                    raise ValueError(f"pair {min(u, v)} {max(u, v)} colored twice")
                flat[i] = color
        if 0 in flat:
            u, v = edge_list(n)[flat.index(0)]
            raise ValueError(f"missing edge {u} {v}")
        return cls(n, k if k is not None else max(classes, default=1), tuple(flat))

    # -- accessors ----------------------------------------------------------

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no loop edges in a complete graph")
        return self.colors[edge_index(u, v, self.n)]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for (u, v), c in zip(combinations(range(self.n), 2), self.colors):
            yield u, v, c

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric color matrix with 0 on the diagonal."""
        m = [[0] * self.n for _ in range(self.n)]
        for u, v, c in self.edges():
            m[u][v] = m[v][u] = c
        return tuple(tuple(row) for row in m)

    @cached_property
    def used_colors(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colors)))

    def edges_of_color(self, c: int) -> list[tuple[int, int]]:
        """E^(c): the pairs carrying color c."""
        return [(u, v) for u, v, col in self.edges() if col == c]

    def vertices_of_color(self, c: int) -> frozenset[int]:
        """V^(c): vertices with at least one incident edge of color c."""
        return frozenset(x for u, v in self.edges_of_color(c) for x in (u, v))

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        adj = {c: [0] * self.n for c in range(1, self.k + 1)}
        for u, v, c in self.edges():
            adj[c][u] |= 1 << v
            adj[c][v] |= 1 << u
        return {c: tuple(rows) for c, rows in adj.items()}

    def adjacency(self, c: int) -> tuple[int, ...]:
        """Bitset adjacency rows of the color-c class (bit v of row u set iff uv has color c)."""
        if not 1 <= c <= self.k:
            return (0,) * self.n
        return self._adjacency[c]

    # -- transformations ----------------------------------------------------

    def relabel(self, perm) -> "EdgeColoring":
        """Return the coloring where new vertex i plays the role of old vertex perm[i]."""
        m = self.matrix
        return EdgeColoring.from_function(self.n, lambda u, v: m[perm[u]][perm[v]], self.k)

    def recolor(self, mapping: Mapping[int, int], k: int | None = None) -> "EdgeColoring":
        colors = tuple(mapping[c] for c in self.colors)
        return EdgeColoring(self.n, k if k is not None else max(colors, default=self.k), colors)

    def induced(self, vertices) -> "EdgeColoring":
        vs = list(vertices)
        m = self.matrix
        return EdgeColoring.from_function(len(vs), lambda u, v: m[vs[u]][vs[v]], self.k)

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        lines = [HEADER, f"n={self.n} k={self.k}"]
        lines.extend(f"{u} {v} {c}" for u, v, c in self.edges())
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {v};" for v in range(self.n))
        for u, v, c in self.edges():
            col = DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{col}", label="{c}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


_NK = re.compile(r"^n\s*=\s*(\d+)\s+k\s*=\s*(\d+)$")
_EDGE = re.compile(r"^(-?\d+)\s+(-?\d+)\s+(-?\d+)$")


def parse_coloring(text: str) -> EdgeColoring:
    """Parse colored-graph v1 text.

    Errors carry the 1-based line number of the offending line.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines or lines[0][1] != HEADER:
        raise ColoringFormatError(f"malformed header, expected '{HEADER}'",
                                  lines[0][0] if lines else 1)
    if len(lines) < 2:
        raise ColoringFormatError("malformed header, missing 'n=<N> k=<K>' line", lines[0][0])
    lineno, body = lines[1]
    m = _NK.match(body)
    if not m:
        raise ColoringFormatError(f"malformed header, expected 'n=<N> k=<K>', got {body!r}", lineno)
    n, k = int(m.group(1)), int(m.group(2))
    if n < 1 or k < 1:
        raise ColoringFormatError("malformed header, n and k must be positive", lineno)
    flat = [0] * (n * (n - 1) // 2)
    for lineno, body in lines[2:]:
        m = _EDGE.match(body)
        if not m:
            raise ColoringFormatError(f"expected '<u> <v> <c>', got {body!r}", lineno)
        u, v, c = (int(x) for x in m.groups())
        if not (0 <= u < v < n):
            raise ColoringFormatError(f"bad vertex pair {u} {v} (need 0 <= u < v < {n})", lineno)
        if not 1 <= c <= k:
            raise ColoringFormatError(f"color out of range: {c} not in 1..{k}", lineno)
        i = edge_index(u, v, n)
        if flat[i]:
            raise ColoringFormatError(f"duplicate edge {u} {v}", lineno)
        flat[i] = c
    if 0 in flat:
        u, v = edge_list(n)[flat.index(0)]
        raise ColoringFormatError(f"missing edge {u} {v}", lines[-1][0])
    return EdgeColoring(n, k, tuple(flat))


def read_coloring(path) -> EdgeColoring:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read())
