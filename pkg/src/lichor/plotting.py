"""Render a colored multigraph to an image file.

Vertices sit on a circle; parallel edges fan out with increasing
curvature; each assigned color gets one hue and a legend entry.
"""

from __future__ import annotations

import math
from typing import Mapping, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D
from matplotlib.patches import FancyArrowPatch

from .multigraph import Multigraph


def _positions(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [(math.cos(2 * math.pi * i / n - math.pi / 2),
             math.sin(2 * math.pi * i / n - math.pi / 2)) for i in range(n)]


def render_coloring(g: Multigraph, coloring: Mapping[int, int], path: str,
                    title: Optional[str] = None) -> None:
    """Write a PNG (or whatever the extension says) of the colored graph."""
    pos = _positions(max(g.vertex_count, 1))
    fig, ax = plt.subplots(figsize=(6, 6))
    used = sorted(set(coloring.values()))
    cmap = plt.get_cmap("tab20")
    hue = {c: cmap(i % 20) for i, c in enumerate(used)}

    slot: dict[tuple[int, int], int] = {}
    for e in g.edge_ids:
        u, v = g.endpoints(e)
        key = (min(u, v), max(u, v))
        k = slot.get(key, 0)
        slot[key] = k + 1
        rad = 0.0 if k == 0 else (0.18 * ((k + 1) // 2)) * (1 if k % 2 else -1)
        color = hue.get(coloring.get(e), "0.7")
        ax.add_patch(FancyArrowPatch(
            pos[u], pos[v], connectionstyle=f"arc3,rad={rad}",
            arrowstyle="-", linewidth=2.2, color=color, zorder=1))
        mx = (pos[u][0] + pos[v][0]) / 2 - rad * (pos[v][1] - pos[u][1])
        my = (pos[u][1] + pos[v][1]) / 2 + rad * (pos[v][0] - pos[u][0])
        if e in coloring:
            ax.annotate(str(coloring[e]), (mx, my), fontsize=8,
                        ha="center", va="center",
                        bbox=dict(boxstyle="circle,pad=0.1", fc="white",
                                  ec=color, lw=0.8), zorder=3)

    for v in range(g.vertex_count):
        ax.scatter(*pos[v], s=260, c="white", edgecolors="black", zorder=4)
        ax.annotate(str(v), pos[v], ha="center", va="center",
                    fontsize=9, zorder=5)

    if used:
        handles = [Line2D([], [], color=hue[c], lw=2.2, label=f"color {c}")
                   for c in used]
        ax.legend(handles=handles, loc="upper right", fontsize=7,
                  framealpha=0.9)
    ax.set_title(title or f"{g.vertex_count} vertices, {g.edge_count} edges")
    ax.set_aspect("equal")
    ax.set_xlim(-1.45, 1.45)
    ax.set_ylim(-1.45, 1.45)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
