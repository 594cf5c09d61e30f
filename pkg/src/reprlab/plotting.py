"""Deterministic SVG figures (fixed hash salt, no timestamp)."""

from __future__ import annotations

import io
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Arc  # noqa: E402

from .partitions import limit_shape_omega, semicircle_cdf  # noqa: E402
from .supercharacter import SetPartition  # noqa: E402

SVG_SALT = "reprlab"


def _svg(fig) -> str:
    buf = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": SVG_SALT, "svg.fonttype": "path"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def shape_svg(breakpoints: Sequence[tuple[float, float]], title: str = "") -> str:
    """Rescaled profile against the limit curve Omega."""
    fig, ax = plt.subplots(figsize=(6, 3.6))
    xs = np.linspace(-2.6, 2.6, 521)
    ax.plot(xs, [limit_shape_omega(x) for x in xs], color="black", lw=1.0, label="Omega")
    bx = [-2.6] + [x for x, _ in breakpoints] + [2.6]
    by = [2.6] + [y for _, y in breakpoints] + [2.6]
    ax.plot(bx, by, color="tab:red", lw=0.9, label="sample")
    ax.plot(xs, np.abs(xs), color="grey", lw=0.5, ls="--")
    ax.set_aspect("equal")
    ax.set_xlim(-2.6, 2.6)
    ax.set_ylim(0, 2.8)
    ax.legend(loc="upper center", frameon=False)
    if title:
        ax.set_title(title)
    return _svg(fig)


def arcs_svg(pi: SetPartition, title: str = "") -> str:
    """Standard arc diagram: points 1..n on a line, an upper arc per (i, j)."""
    n = max(pi.n, 1)
    fig, ax = plt.subplots(figsize=(max(4.0, min(12.0, 0.5 * n)), 2.6))
    ax.scatter(range(1, pi.n + 1), [0] * pi.n, s=max(2, 30 - pi.n // 10), color="black", zorder=3)
    top = 0.0
    for i, j in pi.arcs:
        w = j - i
        ax.add_patch(Arc(((i + j) / 2, 0), w, w, theta1=0, theta2=180, lw=0.8, color="tab:blue"))
        top = max(top, w / 2)
    if pi.n <= 30:
        for k in range(1, pi.n + 1):
            ax.text(k, -0.08 * max(top, 1), str(k), ha="center", va="top", fontsize=8)
    ax.set_xlim(0.5, pi.n + 0.5)
    ax.set_ylim(-0.2 * max(top, 1), top * 1.1 + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return _svg(fig)


def heatmap_svg(partitions: Sequence[SetPartition], bins: int = 40, title: str = "") -> str:
    """Density of arcs (i/n, j/n) on the triangle, with the anti-diagonal y = 1 - x."""
    xs, ys = [], []
    for pi in partitions:
        for i, j in pi.arcs:
            xs.append((i - 0.5) / pi.n)
            ys.append((j - 0.5) / pi.n)
    H, xe, ye = np.histogram2d(xs, ys, bins=bins, range=[[0, 1], [0, 1]])
    fig, ax = plt.subplots(figsize=(4.6, 4.2))
    im = ax.imshow(H.T, origin="lower", extent=(0, 1, 0, 1), cmap="viridis", interpolation="nearest")
    ax.plot([0, 0.5], [1, 0.5], color="white", lw=0.8, ls="--")
    ax.plot([0, 1], [0, 1], color="grey", lw=0.5)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.colorbar(im, ax=ax, fraction=0.046)
    if title:
        ax.set_title(title)
    return _svg(fig)


def cdf_svg(v: Sequence[float], F: Sequence[float], title: str = "") -> str:
    """Empirical co-transition distribution against the semicircle law."""
    fig, ax = plt.subplots(figsize=(5, 3.4))
    grid = np.linspace(-3, 3, 601)
    ax.plot(grid, [semicircle_cdf(x) for x in grid], color="black", lw=1.0, label="semicircle")
    ax.step(v, F, where="post", color="tab:red", lw=0.9, label="co-transition")
    ax.legend(frameon=False)
    if title:
        ax.set_title(title)
    return _svg(fig)


def histogram_svg(values: Sequence[float], title: str = "", bins: int = 40) -> str:
    fig, ax = plt.subplots(figsize=(5, 3.4))
    ax.hist(values, bins=bins, color="tab:blue", alpha=0.8)
    if title:
        ax.set_title(title)
    return _svg(fig)
