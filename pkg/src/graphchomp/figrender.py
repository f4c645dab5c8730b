"""Figure rendering for report output.

Report paths write a delimited table plus a rendered figure side by side:
per-move value diagrams for fans (vertices and edges annotated with the
value of the position they leave behind) and a status chart for
verification runs.
"""

from __future__ import annotations

import math
from typing import Dict, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .graph import Graph


def fan_layout(n: int, variant: str) -> Dict[int, Tuple[float, float]]:
    """Vertex coordinates for the documented fan labelings: hub 0 at center."""
    pos = {0: (0.0, 0.0)}
    if variant == "fan":
        rim = list(range(1, n + 1))
    else:
        pos[1] = (0.0, -0.55)
        rim = list(range(2, n + 1))
    for i, v in enumerate(rim):
        angle = math.pi - math.pi * i / (len(rim) - 1)
        pos[v] = (math.cos(angle), math.sin(angle))
    return pos


def render_option_diagram(G: Graph, pos: Dict[int, Tuple[float, float]],
                          vertex_values: Dict[int, int],
                          edge_values: Dict[Tuple[int, int], int],
                          title: str, path: str) -> None:
    """Draw the position with per-move values; value-0 moves highlighted."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for u, v, _m in G.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        val = edge_values.get((u, v))
        zero = val == 0
        ax.plot([x1, x2], [y1, y2],
                color="tab:orange" if zero else "0.3",
                linewidth=2.2 if zero else 1.2, zorder=1)
        if val is not None:
            ax.annotate(str(val), ((x1 + x2) / 2, (y1 + y2) / 2),
                        fontsize=8, ha="center", va="center",
                        color="tab:orange" if zero else "0.25",
                        bbox=dict(boxstyle="circle,pad=0.12", fc="white",
                                  ec="none", alpha=0.85))
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.scatter(xs, ys, s=42, color="black", zorder=3)
    cx = sum(xs) / len(xs)
    cy = sum(ys) / len(ys)
    for v, (x, y) in pos.items():
        dx, dy = x - cx, y - cy
        norm = math.hypot(dx, dy) or 1.0
        val = vertex_values.get(v)
        if val is None:
            continue
        ax.annotate(str(val), (x + 0.13 * dx / norm, y + 0.13 * dy / norm),
                    fontsize=10, fontweight="bold", ha="center", va="center",
                    color="tab:orange" if val == 0 else "black")
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


_STATUS_COLORS = {"pass": "tab:green", "fail": "tab:red", "skipped": "tab:gray"}


def render_verify_summary(reports: Sequence, path: str,
                          title: str = "verification suite") -> None:
    """Horizontal runtime bars, one per claim, colored by status."""
    names = [r.claim_id for r in reports]
    runtimes = [max(r.runtime, 1e-3) for r in reports]
    colors = [_STATUS_COLORS.get(r.status, "tab:blue") for r in reports]
    fig, ax = plt.subplots(figsize=(7.2, 0.34 * len(reports) + 1.4))
    y = range(len(reports))
    ax.barh(list(y), runtimes, color=colors)
    ax.set_yticks(list(y))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("runtime (s)")
    ax.set_xscale("log")
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    ax.set_title(f"{title}: {summary}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
