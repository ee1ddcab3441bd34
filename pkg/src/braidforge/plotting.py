"""Figures for verification reports: a claim-by-n status grid and per-claim run times."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402

from .verify import STATUSES, CheckResult  # noqa: E402

_COLOURS = {"none": "#f0f0f0", "verified": "#4caf50", "refuted": "#d32f2f",
            "inconclusive": "#ffb300", "unsupported": "#9e9e9e"}


def status_grid(results: Sequence[CheckResult], path: Path) -> Path:
    ids = sorted({r.id for r in results})
    ns = sorted({r.n for r in results})
    codes = ["none", *STATUSES]
    grid = [[0] * len(ns) for _ in ids]
    necessary = []
    for r in results:
        i, j = ids.index(r.id), ns.index(r.n)
        grid[i][j] = codes.index(r.status)
        if r.strength == "necessary":
            necessary.append((j, i))

    fig, ax = plt.subplots(figsize=(1.6 + 0.45 * len(ns), 1.2 + 0.22 * len(ids)))
    cmap = ListedColormap([_COLOURS[c] for c in codes])
    ax.imshow(grid, cmap=cmap, vmin=0, vmax=len(codes) - 1, aspect="auto")
    for x, y in necessary:
        ax.text(x, y, "nc", ha="center", va="center", fontsize=6)
    ax.set_xticks(range(len(ns)), [str(n) for n in ns])
    ax.set_yticks(range(len(ids)), ids, fontsize=7)
    ax.set_xlabel("n")
    ax.legend(handles=[Patch(color=_COLOURS[s], label=s) for s in STATUSES],
              loc="upper left", bbox_to_anchor=(1.01, 1), fontsize=7)
    ax.set_title("claim status (nc = necessary conditions only)", fontsize=9)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def timing_chart(results: Sequence[CheckResult], path: Path) -> Path:
    totals: dict[str, float] = defaultdict(float)
    for r in results:
        totals[r.id] += r.wall_time
    ids = sorted(totals, key=totals.get)
    fig, ax = plt.subplots(figsize=(7, 1.2 + 0.22 * len(ids)))
    ax.barh(ids, [totals[i] for i in ids], color="#5c6bc0")
    ax.set_xlabel("wall time summed over n (s)")
    ax.tick_params(axis="y", labelsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_figures(results: Sequence[CheckResult], outdir: str | Path) -> list[Path]:
    """Write status_grid.png and timings.png into ``outdir``; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    if not results:
        return []
    return [status_grid(results, outdir / "status_grid.png"), timing_chart(results, outdir / "timings.png")]
