"""Figures and delimited output for verification reports."""

from __future__ import annotations

import math
import os
import re

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.lines import Line2D  # noqa: E402

from .coloring import DOT_PALETTE, EdgeColoring  # noqa: E402

# Hex equivalents of the X11 names in DOT_PALETTE, same order.
PLOT_PALETTE = (
    "#ff0000", "#0000ff", "#00cd00", "#ffa500", "#a020f0", "#a52a2a",
    "#ff00ff", "#008b8b", "#cdad00", "#666666", "#000080", "#6b8e23",
)
assert len(PLOT_PALETTE) == len(DOT_PALETTE)

# No timestamps or version strings in the files, so reruns give identical bytes.
_PNG_META = {"Software": None}
MAX_DRAWN_ORDER = 40


def _plot_color(c: int) -> str:
    return PLOT_PALETTE[(c - 1) % len(PLOT_PALETTE)]


def slug(text: str) -> str:
    s = re.sub(r"[^A-Za-z0-9]+", "-", text).strip("-").lower()
    return s or "figure"


def circle_layout(n: int):
    return [(math.cos(2 * math.pi * i / n + math.pi / 2), math.sin(2 * math.pi * i / n + math.pi / 2))
            for i in range(n)]


def draw_coloring(g: EdgeColoring, path, title: str | None = None):
    """Vertices on a circle, each edge drawn in its color's palette entry."""
    pos = circle_layout(g.n)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    width = 2.0 if g.n <= 8 else (1.0 if g.n <= 20 else 0.5)
    for u, v, c in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color=_plot_color(c), lw=width, zorder=1)
    xs, ys = zip(*pos)
    ax.scatter(xs, ys, s=120 if g.n <= 12 else 40, color="white", edgecolor="black", zorder=2)
    if g.n <= 20:
        for i, (x, y) in enumerate(pos):
            ax.text(x, y, str(i), ha="center", va="center", fontsize=7, zorder=3)
    handles = [Line2D([0], [0], color=_plot_color(c), lw=2, label=f"color {c}")
               for c in g.used_colors]
    if handles:
        ax.legend(handles=handles, loc="upper right", fontsize=7, frameon=False, bbox_to_anchor=(1.12, 1.05))
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def case_histogram(counts, path, title: str | None = None):
    labels = sorted(counts)
    fig, ax = plt.subplots(figsize=(5, 3))
    bars = ax.bar(labels, [counts[k] for k in labels], color="#4c72b0")
    for b, k in zip(bars, labels):
        ax.annotate(str(counts[k]), (b.get_x() + b.get_width() / 2, b.get_height()),
                    ha="center", va="bottom", fontsize=7)
    ax.set_yscale("log")
    ax.set_ylabel("classes")
    ax.set_xlabel("case")
    ax.spines[["top", "right"]].set_visible(False)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    return path


def write_tsv(lines, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def write_report(reports, out_dir, timings: bool = False) -> list[str]:
    """Write ``verify.tsv`` plus one PNG per histogram and per drawable witness."""
    os.makedirs(out_dir, exist_ok=True)
    lines = None
    written = []
    for rep in reports:
        body = rep.tsv_lines(timings)
        lines = body if lines is None else lines + body[1:]
        for name, counts in rep.histograms.items():
            if counts:
                p = os.path.join(out_dir, f"{slug(rep.suite)}--{slug(name)}.png")
                written.append(case_histogram(counts, p, name))
        for row in rep.rows:
            if row.witness is not None and row.witness.n <= MAX_DRAWN_ORDER:
                p = os.path.join(out_dir, f"{slug(rep.suite)}--{slug(row.check)}.png")
                written.append(draw_coloring(row.witness, p, row.check))
    written.insert(0, write_tsv(lines or [], os.path.join(out_dir, "verify.tsv")))
    return written
