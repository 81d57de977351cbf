"""Lower-bound colorings and closed-form bounds.

Every generator returns a plain :class:`EdgeColoring`; the ``preset_*``
functions wrap one with the claims it must satisfy (which monochromatic or
rainbow targets it avoids) and check those claims with the detectors before
handing it out.  Vertices are numbered block by block, so a preset's
coloring is reproducible and its canonical key is stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coloring import EdgeColoring
from .detect import contains_connected_super, find_mono_embedding, find_rainbow_path
from .pattern import Pattern, complete, complete_bipartite, copies, cycle, parse_pattern

# Two-color Ramsey numbers R(K_r, K_r) used only by the bound formulas.
KNOWN_R2 = {3: 6, 4: 18}


class ConstructionError(RuntimeError):
    """A generated coloring violated one of its own claims."""


@dataclass(frozen=True)
class PackingSpec:
    """m vertex-disjoint copies of ``base``; with ``connected_super`` they must
    also sit inside one connected monochromatic subgraph."""

    base: Pattern
    multiplicity: int = 1
    connected_super: bool = False

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be at least 1")
        if self.base.n < 1:
            raise ValueError("base pattern must be nonempty")

    @property
    def pattern(self) -> Pattern:
        return copies(self.base, self.multiplicity)

    def __str__(self):
        inner = f"{self.multiplicity}*{self.base}" if self.multiplicity > 1 else str(self.base)
        return f"C({inner})" if self.connected_super else inner


@dataclass(frozen=True)
class Claim:
    """What a construction avoids.

    kind is ``"no_mono"`` (no copy of the pattern inside one color class),
    ``"no_connected_super"`` (no color-class component holding m disjoint
    copies of the base) or ``"no_rainbow_path"`` (``length`` vertices).
    """

    kind: str
    pattern: str = ""
    multiplicity: int = 1
    colors: tuple[int, ...] | None = None
    length: int = 0
    target: Pattern | None = field(default=None, compare=False, repr=False)

    def describe(self) -> str:
        where = "any color" if self.colors is None else "color " + "/".join(map(str, self.colors))
        if self.kind == "no_rainbow_path":
            return f"no rainbow P{self.length}"
        if self.kind == "no_connected_super":
            return f"no connected {self.multiplicity}x{self.pattern} in {where}"
        return f"no monochromatic {self.pattern} in {where}"

    def check(self, g: EdgeColoring):
        """Return (holds, witness-or-None)."""
        if self.kind == "no_rainbow_path":
            emb = find_rainbow_path(g, self.length)
            return emb is None, emb
        colors = g.used_colors if self.colors is None else [c for c in self.colors if c in g.used_colors]
        if self.kind == "no_connected_super":
            spec = PackingSpec(parse_pattern(self.pattern), self.multiplicity, True)
            hit = contains_connected_super(g, spec, colors=colors)
            return hit is None, hit
        if self.kind == "no_mono":
            h = self.target if self.target is not None else parse_pattern(self.pattern)
            emb = find_mono_embedding(g, h, colors=colors)
            return emb is None, emb
        raise ValueError(f"unknown claim kind {self.kind!r}")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "description": self.describe()}
        if self.pattern:
            out["pattern"] = self.pattern
        if self.kind == "no_connected_super":
            out["multiplicity"] = self.multiplicity
        if self.colors is not None:
            out["colors"] = list(self.colors)
        if self.length:
            out["length"] = self.length
        return out


@dataclass
class Construction:
    name: str
    coloring: EdgeColoring
    claims: list[Claim]
    params: dict = field(default_factory=dict)

    def validate(self) -> list[tuple[Claim, bool, object]]:
        return [(c, *c.check(self.coloring)) for c in self.claims]

    def claims_json(self) -> dict:
        return {
            "construction": self.name,
            "params": self.params,
            "order": self.coloring.n,
            "claims": [c.to_json() for c in self.claims],
        }


def _checked(con: Construction, validate: bool) -> Construction:
    if validate:
        for claim, holds, witness in con.validate():
            if not holds:
                raise ConstructionError(f"{con.name}: claim '{claim.describe()}' fails: {witness}")
    return con


# -- raw generators -------------------------------------------------------------------------

def _blocks(orders: Sequence[int]):
    owner = []
    for i, size in enumerate(orders):
        owner.extend([i] * size)
    return owner


def build_matching_k4() -> EdgeColoring:
    """K4 whose three color classes are the three perfect matchings."""
    return EdgeColoring.from_edge_classes(4, {
        1: [(0, 1), (2, 3)],
        2: [(0, 2), (1, 3)],
        3: [(0, 3), (1, 2)],
    })


def build_blocks(orders: Sequence[int], inner_colors: Sequence[int], cross) -> EdgeColoring:
    """Monochromatic cliques of the given orders; ``cross(i, j)`` colors edges between blocks i < j."""
    owner = _blocks(orders)
    n = len(owner)
    if n == 0:
        raise ValueError("construction has no vertices")

    def color(u, v):
        a, b = owner[u], owner[v]
        if a == b:
            return inner_colors[a]
        return cross(min(a, b), max(a, b))

    k = max(list(inner_colors) + [cross(i, j) for i in range(len(orders)) for j in range(i + 1, len(orders))])
    return EdgeColoring.from_function(n, color, k)


def build_three_block(block_orders=(2, 2, 1), inner_colors=(1, 2, 3), join_color=3) -> EdgeColoring:
    """Three monochromatic cliques, every edge between blocks in ``join_color``."""
    a1, a2, b = block_orders
    if min(a1, a2) < 1 or b < 0:
        raise ValueError("need two nonempty blocks and a third block of order >= 0")
    return build_blocks(block_orders, inner_colors, lambda i, j: join_color)


def build_two_block(order1: int, order2: int) -> EdgeColoring:
    """Clique of order1 in color 1, clique of order2 in color 2, cross edges color 2."""
    if order1 < 1 or order2 < 0:
        raise ValueError("need order1 >= 1 and order2 >= 0")
    return build_blocks((order1, order2), (1, 2), lambda i, j: 2).recolor({1: 1, 2: 2}, k=2)


def build_cyclic_three(part_order: int) -> EdgeColoring:
    """Three cliques in colors 1, 2, 3; between them c(U1,U2)=3, c(U2,U3)=1, c(U3,U1)=2."""
    if part_order < 1:
        raise ValueError("part_order must be positive")
    between = {(0, 1): 3, (1, 2): 1, (0, 2): 2}
    return build_blocks((part_order,) * 3, (1, 2, 3), lambda i, j: between[(i, j)])


def build_disjoint_union_plus_green(base: EdgeColoring, copies_: int, green_order: int) -> EdgeColoring:
    """Disjoint copies of a 2-colored base plus a color-3 clique, all cross edges color 3."""
    if set(base.used_colors) - {1, 2}:
        raise ValueError("base must use colors 1 and 2 only")
    if copies_ < 1 or green_order < 0:
        raise ValueError("need copies >= 1 and green_order >= 0")
    owner = _blocks([base.n] * copies_ + [green_order])
    offset = [0]
    for i in range(copies_):
        offset.append(offset[-1] + base.n)
    m = base.matrix

    def color(u, v):
        a, b = owner[u], owner[v]
        if a == b and a < copies_:
            return m[u - offset[a]][v - offset[a]]
        return 3

    if copies_ == 1 and green_order == 0:
        return base
    return EdgeColoring.from_function(len(owner), color, 3)


def build_case_b(parts, dominant: int = 1, inner="own") -> EdgeColoring:
    """Dominant-color coloring: parts ``[(order, color), ...]``, cross edges dominant.

    ``inner`` is ``"own"`` (each part a clique in its own color),
    ``"dominant"``, or a list giving, per part, an EdgeColoring on colors
    {1, 2} that is mapped to (dominant, part color).
    """
    colors = [c for _, c in parts]
    if len(set(colors)) != len(colors) or dominant in colors:
        raise ValueError("part colors must be distinct and differ from the dominant color")
    orders = [o for o, _ in parts]
    owner = _blocks(orders)
    start = [sum(orders[:i]) for i in range(len(orders))]

    def color(u, v):
        a, b = owner[u], owner[v]
        if a != b:
            return dominant
        if inner == "own":
            return colors[a]
        if inner == "dominant":
            return dominant
        sub = inner[a]
        return dominant if sub.color(u - start[a], v - start[a]) == 1 else colors[a]

    return EdgeColoring.from_function(len(owner), color, max(colors + [dominant]))


def paley_coloring(q: int) -> EdgeColoring:
    """Color uv 1 when u - v is a nonzero square mod prime q (q = 1 mod 4), else 2."""
    if q % 4 != 1 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError("Paley coloring needs a prime q = 1 mod 4")
    squares = {(x * x) % q for x in range(1, q)}
    return EdgeColoring.from_function(q, lambda u, v: 1 if (u - v) % q in squares else 2, 2)


def extremal_two_coloring(h: Pattern, node_budget: int = 10**6) -> EdgeColoring:
    """A 2-coloring of K_{R2(h)-1} with no monochromatic h.

    K3 and K4 use the Paley colorings of order 5 and 17; anything else is
    found by exhaustive search.
    """
    if h == complete(3):
        return paley_coloring(5)
    if h == complete(4):
        return paley_coloring(17)
    from .search import RamseyQuery, compute_number
    res = compute_number(RamseyQuery.classical(h, 2, n_max=12), node_budget=node_budget)
    if res.value is None or res.witness is None:
        raise ConstructionError(f"could not determine R2({h}) within budget")
    return res.witness


# -- presets ---------------------------------------------------------------------------------

def preset_matching_k4(validate=True) -> Construction:
    return _checked(Construction("matching-k4", build_matching_k4(), [
        Claim("no_rainbow_path", length=4),
        Claim("no_mono", "P3"),
    ]), validate)


def preset_three_block_triangles(m: int, validate=True) -> Construction:
    if m < 2:
        raise ValueError("preset defined for m >= 2")
    g = build_three_block((3 * m - 1, 3 * m - 1, m - 1))
    return _checked(Construction("three-block-k3", g, [Claim("no_mono", f"{m}K3")], {"m": m}), validate)


def preset_three_block_pentagons(m: int, validate=True) -> Construction:
    if m < 2:
        raise ValueError("preset defined for m >= 2")
    g = build_three_block((5 * m - 1, 5 * m - 1, m - 1))
    return _checked(Construction("three-block-c5", g, [Claim("no_mono", f"{m}C5")], {"m": m}), validate)


def preset_connected_pentagons(m: int, validate=True) -> Construction:
    """Two color-1 cliques of order 5m-1 and a color-2 clique of order m-1, cross edges color 2."""
    g = build_three_block((5 * m - 1, 5 * m - 1, m - 1), inner_colors=(1, 1, 2), join_color=2)
    return _checked(Construction("connected-c5", g, [
        Claim("no_connected_super", "C5", m),
    ], {"m": m}), validate)


def preset_two_block_pentagon_matching(m: int, n: int, validate=True) -> Construction:
    g = build_two_block(5 * m - 1, n - 1)
    return _checked(Construction("two-block-c5-k2", g, [
        Claim("no_connected_super", "C5", m, colors=(1,)),
        Claim("no_mono", f"{n}K2" if n > 1 else "K2", colors=(2,)),
    ], {"m": m, "n": n}), validate)


def almost_bipartite(s: int, t: int) -> Pattern:
    """K_{s,t} with one extra edge inside the s-side."""
    if s < 2 or t < 1:
        raise ValueError("need s >= 2 and t >= 1")
    base = complete_bipartite(s, t)
    label = "K3" if (s, t) == (2, 1) else f"K_{{{s},{t}}}+e"
    return Pattern(base.n, base.edges | {(0, 1)}, label=label)


def preset_cyclic_three(m: int, s: int, t: int, validate=True) -> Construction:
    h = almost_bipartite(s, t)
    g = build_cyclic_three(m * (s + t) - 1)
    claims = [Claim("no_mono", f"{m}K3")] if (s, t) == (2, 1) else []
    con = Construction("cyclic-three", g, claims, {"m": m, "s": s, "t": t})
    if not claims:
        con.claims.append(_pattern_claim(copies(h, m)))
    return _checked(con, validate)


def preset_two_block_almost_bipartite(m: int, n: int, s: int, t: int, validate=True) -> Construction:
    h = almost_bipartite(s, t)
    g = build_two_block(m * (s + t) - 1, n - 1)
    con = Construction("two-block-h-k2", g, [
        _pattern_claim(copies(h, m), colors=(1,)),
        Claim("no_mono", f"{n}K2" if n > 1 else "K2", colors=(2,)),
    ], {"m": m, "n": n, "s": s, "t": t})
    return _checked(con, validate)


def _pattern_claim(p: Pattern, colors=None) -> Claim:
    return Claim("no_mono", str(p), colors=colors, target=p)


def preset_cliques_plus_green(r: int, n: int, validate=True) -> Construction:
    if r not in KNOWN_R2:
        raise ValueError(f"no stored critical coloring for r={r}")
    base = extremal_two_coloring(complete(r))
    g = build_disjoint_union_plus_green(base, r - 1, n - 1)
    target = f"{n}K{r}" if n > 1 else f"K{r}"
    return _checked(Construction("cliques-plus-green", g, [Claim("no_mono", target)], {"r": r, "n": n}), validate)


def preset_double_plus_green(h: Pattern, validate=True, node_budget: int = 10**6) -> Construction:
    if not h.is_connected or h.size == 0:
        raise ValueError("pattern must be connected with at least one edge")
    base = extremal_two_coloring(h, node_budget)
    g = build_disjoint_union_plus_green(base, h.chromatic_number - 1, 2 * h.min_color_class - 1)
    return _checked(Construction("double-plus-green", g, [_pattern_claim(copies(h, 2))], {"H": str(h)}), validate)


def preset_case_b(parts, validate=True) -> Construction:
    g = build_case_b(parts)
    return _checked(Construction("case-b", g, [Claim("no_rainbow_path", length=5)],
                                 {"parts": [list(p) for p in parts]}), validate)


PRESETS = {
    "matching-k4": lambda a: preset_matching_k4(),
    "three-block-k3": lambda a: preset_three_block_triangles(a.m),
    "three-block-c5": lambda a: preset_three_block_pentagons(a.m),
    "connected-c5": lambda a: preset_connected_pentagons(a.m),
    "two-block-c5-k2": lambda a: preset_two_block_pentagon_matching(a.m, a.n),
    "cyclic-three": lambda a: preset_cyclic_three(a.m, a.s, a.t),
    "two-block-h-k2": lambda a: preset_two_block_almost_bipartite(a.m, a.n, a.s, a.t),
    "cliques-plus-green": lambda a: preset_cliques_plus_green(a.r, a.n),
    "double-plus-green": lambda a: preset_double_plus_green(parse_pattern(a.H)),
}


# -- bound formulas --------------------------------------------------------------------------

class UnknownRamseyValue(KeyError):
    pass


def _r2_complete(r: int, override=None) -> int:
    if override is not None:
        return override
    if r not in KNOWN_R2:
        raise UnknownRamseyValue(f"R2(K{r}) not in the known-values table; pass r2=")
    return KNOWN_R2[r]


def chromatic_lower_bound(g: Pattern) -> int:
    """(chi - 1)(|G| - 1) + s, s the smallest color class over proper chi-colorings."""
    return (g.chromatic_number - 1) * (g.n - 1) + g.min_color_class


def _as_copies(p: Pattern):
    comps = p.components
    first = comps[0]
    if any(c != first for c in comps):
        raise ValueError(f"{p} is not a union of identical components")
    return first, len(comps)


def bound_formulas(pattern: Pattern, which: str, r2: int | None = None) -> int:
    """Evaluate a closed-form bound.

    ``which``:
      * ``"chromatic"``: (chi-1)(|G|-1) + s_chi(G) for a connected G;
      * ``"cliques"``: (r-1)(R2(K_r)-1) + n for the pattern nK_r;
      * ``"double"``: (chi-1)(R2(G)-1) + 2 s_chi(G) for the pattern 2G.
    ``r2`` overrides the two-color Ramsey value the formula needs.
    """
    if which == "chromatic":
        return chromatic_lower_bound(pattern)
    if which == "cliques":
        base, n = _as_copies(pattern)
        r = base.n
        if base != complete(r):
            raise ValueError("pattern must be n disjoint complete graphs")
        return (r - 1) * (_r2_complete(r, r2) - 1) + n
    if which == "double":
        base, count = _as_copies(pattern)
        if count != 2:
            raise ValueError("pattern must be two disjoint copies of a connected graph")
        if r2 is None:
            if base.n >= 1 and base == complete(base.n):
                r2 = _r2_complete(base.n)
            else:
                raise UnknownRamseyValue(f"R2({base}) unknown; pass r2=")
        return (base.chromatic_number - 1) * (r2 - 1) + 2 * base.min_color_class
    raise ValueError(f"unknown bound {which!r}")


def cyclic_bound(m: int, s: int, t: int) -> int:
    return 3 * m * (s + t) - 2


def pentagon_matching_value(m: int, n: int) -> int:
    return 5 * m + n - 1


def connected_triangles_value(m: int) -> int:
    return 7 * m - 2


def connected_pentagons_value(m: int) -> int:
    return 11 * m - 2
