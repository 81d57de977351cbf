"""Small target graphs and the pattern expression language.

Grammar (whitespace ignored)::

    expr := term ("+" term)*
    term := [mult] base
    base := "P" int | "C" int | "K" int | "K_{" int "," int "}"

``+`` is disjoint union and ``mult`` is the number of disjoint copies, so
``2K3`` is two vertex-disjoint triangles and ``K_{1,2}+K2`` is a cherry
plus a separate edge.  ``P<n>`` is the path on n vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

MAX_EXACT_ORDER = 12


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class PatternTooLarge(ValueError):
    """Exact colouring invariants are only computed up to MAX_EXACT_ORDER vertices."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Pattern:
    n: int
    edges: frozenset = frozenset()
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError("patterns have no loops")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def __str__(self):
        return self.label or f"Pattern(n={self.n}, m={self.size})"

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(_popcount(r) for r in self.adjacency)

    @property
    def has_isolated_vertices(self) -> bool:
        return 0 in self.degrees

    @cached_property
    def _component_sets(self) -> tuple[tuple[int, ...], ...]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp, frontier = 1 << s, 1 << s
            while frontier:
                nxt = 0
                x = frontier
                while x:
                    low = x & -x
                    nxt |= self.adjacency[low.bit_length() - 1]
                    x ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(tuple(v for v in range(self.n) if comp >> v & 1))
        return tuple(comps)

    @cached_property
    def components(self) -> tuple["Pattern", ...]:
        return tuple(self.subpattern(vs) for vs in self._component_sets)

    @property
    def is_connected(self) -> bool:
        return len(self._component_sets) <= 1

    def subpattern(self, vertices) -> "Pattern":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        return Pattern(len(vs), es)

    def is_isomorphic(self, other: "Pattern") -> bool:
        if self.n != other.n or self.size != other.size:
            return False
        if sorted(self.degrees) != sorted(other.degrees):
            return False
        from .detect import find_embedding_in_graph
        return find_embedding_in_graph(other.adjacency, self) is not None

    # -- bipartite structure ------------------------------------------------

    @cached_property
    def _component_sides(self) -> tuple[tuple[int, int], ...] | None:
        sides = []
        for comp in self._component_sets:
            side = {comp[0]: 0}
            stack = [comp[0]]
            while stack:
                u = stack.pop()
                for v in range(self.n):
                    if self.adjacency[u] >> v & 1:
                        if v not in side:
                            side[v] = 1 - side[u]
                            stack.append(v)
                        elif side[v] == side[u]:
                            return None
            a = sum(1 for s in side.values() if s == 0)
            sides.append((a, len(side) - a))
        return tuple(sides)

    @property
    def is_bipartite(self) -> bool:
        return self._component_sides is not None

    @cached_property
    def _balanced_sides(self) -> tuple[int, int] | None:
        # Components may be flipped independently; take the most balanced split.
        sides = self._component_sides
        if sides is None:
            return None
        reachable = {0}
        for a, b in sides:
            reachable = {r + a for r in reachable} | {r + b for r in reachable}
        big = min(max(r, self.n - r) for r in reachable)
        return big, self.n - big

    @property
    def big_side(self) -> int | None:
        """b(H): larger side of the most balanced bipartition, None if not bipartite."""
        sides = self._balanced_sides
        return None if sides is None else sides[0]

    @property
    def small_side(self) -> int | None:
        sides = self._balanced_sides
        return None if sides is None else sides[1]

    # -- proper vertex colourings -------------------------------------------

    @cached_property
    def chromatic_number(self) -> int:
        if self.n == 0:
            return 0
        if not self.edges:
            return 1
        if self.is_bipartite:
            return 2
        if self.n > MAX_EXACT_ORDER:
            if self.is_connected:
                raise PatternTooLarge(f"order {self.n} exceeds {MAX_EXACT_ORDER}")
            return max(c.chromatic_number for c in self.components)
        k = 3
        while _first_coloring(self.adjacency, self.n, k) is None:
            k += 1
        return k

    @cached_property
    def min_color_class(self) -> int:
        """Smallest colour class over all proper colourings with exactly chi colours.

        Not to be confused with :attr:`small_side`, the bipartition measure.
        """
        if self.n > MAX_EXACT_ORDER:
            raise PatternTooLarge(f"order {self.n} exceeds {MAX_EXACT_ORDER}")
        if self.n == 0:
            return 0
        chi = self.chromatic_number
        best = self.n
        for classes in _all_colorings(self.adjacency, self.n, chi):
            if len(classes) == chi:
                best = min(best, min(classes))
                if best == 1:
                    break
        return best

    # -- combinators --------------------------------------------------------

    def __add__(self, other: "Pattern") -> "Pattern":
        return disjoint_union(self, other)

    def __rmul__(self, m: int) -> "Pattern":
        return copies(self, m)


def _vertex_order(adj, n):
    return sorted(range(n), key=lambda v: (-_popcount(adj[v]), v))


def _first_coloring(adj, n, k):
    order = _vertex_order(adj, n)
    col = [-1] * n

    def rec(i, used):
        if i == n:
            return list(col)
        v = order[i]
        forbidden = {col[u] for u in range(n) if adj[v] >> u & 1 and col[u] >= 0}
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                col[v] = c
                got = rec(i + 1, max(used, c + 1))
                if got is not None:
                    return got
        col[v] = -1
        return None

    return rec(0, 0)


def _all_colorings(adj, n, k):
    """Yield class-size lists of every proper colouring with at most k colours, up to colour renaming."""
    order = _vertex_order(adj, n)
    col = [-1] * n
    sizes = [0] * k

    def rec(i, used):
        if i == n:
            yield [s for s in sizes[:used]]
            return
        v = order[i]
        forbidden = {col[u] for u in range(n) if adj[v] >> u & 1 and col[u] >= 0}
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                col[v] = c
                sizes[c] += 1
                yield from rec(i + 1, max(used, c + 1))
                sizes[c] -= 1
        col[v] = -1

    yield from rec(0, 0)


# -- named families -----------------------------------------------------------

def path(n: int) -> Pattern:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Pattern(n, frozenset((i, i + 1) for i in range(n - 1)), label=f"P{n}")


def cycle(n: int) -> Pattern:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Pattern(n, frozenset((i, (i + 1) % n) for i in range(n)), label=f"C{n}")


def complete(n: int) -> Pattern:
    if n < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Pattern(n, frozenset(combinations(range(n), 2)), label=f"K{n}")


def complete_bipartite(a: int, b: int) -> Pattern:
    if a < 1 or b < 1:
        raise ValueError("both sides of K_{a,b} must be nonempty")
    es = frozenset((i, a + j) for i in range(a) for j in range(b))
    return Pattern(a + b, es, label=f"K_{{{a},{b}}}")


def disjoint_union(*parts: Pattern) -> Pattern:
    n, es = 0, set()
    for p in parts:
        es.update((u + n, v + n) for u, v in p.edges)
        n += p.n
    labels = [p.label for p in parts]
    label = "+".join(labels) if all(labels) else None
    return Pattern(n, frozenset(es), label=label)


def copies(p: Pattern, m: int) -> Pattern:
    if m < 1:
        raise ValueError("multiplicity must be at least 1")
    out = disjoint_union(*([p] * m))
    if m > 1 and p.label:
        base = p.label if "+" not in p.label else f"({p.label})"
        out = Pattern(out.n, out.edges, label=f"{m}{base}")
    return out


# -- parser -------------------------------------------------------------------

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise PatternSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise PatternSyntaxError(f"expected integer, found {found!r}", start)
        return int(self.text[start:self.pos])


def parse_pattern(expr: str) -> Pattern:
    """Parse a pattern expression such as ``"2K3"``, ``"C5"`` or ``"K_{1,2}+K2"``."""
    sc = _Scanner(expr)
    terms = [_term(sc)]
    while sc.peek() == "+":
        sc.take("+")
        terms.append(_term(sc))
    if sc.peek():
        raise PatternSyntaxError(f"unexpected {sc.peek()!r}", sc.pos)
    result = terms[0] if len(terms) == 1 else disjoint_union(*terms)
    return Pattern(result.n, result.edges, label="".join(expr.split()))


def _term(sc: _Scanner) -> Pattern:
    mult = 1
    if sc.peek().isdigit():
        at = sc.pos
        mult = sc.integer()
        if mult == 0:
            raise PatternSyntaxError("zero multiplicity", at)
    base = _base(sc)
    return base if mult == 1 else copies(base, mult)


def _base(sc: _Scanner) -> Pattern:
    head = sc.peek()
    at = sc.pos
    if head not in ("P", "C", "K"):
        raise PatternSyntaxError(f"expected P, C or K, found {head or 'end of input'!r}", at)
    sc.pos += 1
    if head == "K" and sc.peek() == "_":
        sc.take("_")
        sc.take("{")
        a = sc.integer()
        sc.take(",")
        b = sc.integer()
        sc.take("}")
        builder = lambda: complete_bipartite(a, b)  # noqa: E731
    else:
        size = sc.integer()
        builder = {"P": lambda: path(size), "C": lambda: cycle(size), "K": lambda: complete(size)}[head]
    try:
        return builder()
    except ValueError as exc:
        raise PatternSyntaxError(str(exc), at) from None
