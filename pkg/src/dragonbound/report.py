"""Figure-and-table report: matplotlib panels plus a delimited sequence table."""

from __future__ import annotations

import csv
from pathlib import Path

from . import counting, polyomino
from .curve import dragon_path
from .lsystem import DRAGON, iterate
from .polyomino import phi


def _curve_panels(plt, out_dir, n_top):
    ns = list(range(0, min(n_top, 6) + 1))
    fig, axes = plt.subplots(1, len(ns), figsize=(2.2 * len(ns), 2.6))
    for ax, n in zip(axes, ns):
        pts = dragon_path(iterate(DRAGON, n))
        ax.plot([x for x, _ in pts], [y for _, y in pts], color="gray", lw=1.2)
        ax.set_aspect("equal")
        ax.set_axis_off()
        ax.set_title(f"n={n}", fontsize=9)
    fig.tight_layout()
    out = Path(out_dir) / "curve_panels.png"
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def _boundary_panels(plt, out_dir, n_top):
    ns = [n for n in (0, 1, 2, 3, 4, 5, n_top) if n <= n_top]
    ns = sorted(set(ns))
    fig, axes = plt.subplots(1, len(ns), figsize=(2.4 * len(ns), 2.8))
    if len(ns) == 1:
        axes = [axes]
    for ax, n in zip(axes, ns):
        path = dragon_path(iterate(DRAGON, n))
        cells = polyomino.cells_from_curve(path)
        cycle = polyomino.trace_boundary(cells)
        left, _ = polyomino.split_boundary(cycle, path[-1])
        k = len(left)
        mapped = [phi(x, y) for x, y in path]
        ax.plot([a for a, _ in mapped], [b for _, b in mapped],
                color="gray", lw=0.8)
        lpart = cycle[: 2 * k + 1]
        rpart = cycle[2 * k:]
        ax.plot([a for a, _ in lpart], [b for _, b in lpart],
                color="blue", lw=1.6)
        ax.plot([a for a, _ in rpart], [b for _, b in rpart],
                color="red", lw=1.6)
        ax.set_aspect("equal")
        ax.set_axis_off()
        ax.set_title(f"n={n}", fontsize=9)
    fig.tight_layout()
    out = Path(out_dir) / "boundary_panels.png"
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def _growth_plot(plt, out_dir, n_top):
    ns = list(range(0, n_top + 1))
    left = counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.E_R, counting.LEFT_WEIGHTS,
        len(ns), pre_steps=1)
    right = counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.E_L, counting.ONES5, len(ns))
    full = counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.FULL_SEED, counting.ONES5, len(ns))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, left, label="left", color="blue")
    ax.semilogy(ns, right, label="right", color="red")
    ax.semilogy(ns, full, label="full", color="gray")
    ax.set_xlabel("generation")
    ax.set_ylabel("boundary elements")
    ax.legend()
    fig.tight_layout()
    out = Path(out_dir) / "growth.png"
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def _sequence_csv(out_dir, n_top):
    count = n_top + 1
    left = counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.E_R, counting.LEFT_WEIGHTS,
        count, pre_steps=1)
    right = counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.E_L, counting.ONES5, count)
    full = counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.FULL_SEED, counting.ONES5, count)
    binary = counting.sequence_prefix(
        counting.STRING_TYPE_MATRIX, counting.STRING_SEED, counting.ONES5, count)
    arrays = counting.sequence_prefix(
        counting.ARRAY_TYPE_MATRIX, counting.ARRAY_SEED, counting.ONES7, count)
    out = Path(out_dir) / "sequences.csv"
    with out.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "left", "right", "full", "binary", "arrays"])
        for n in range(count):
            row = [n, left[n], right[n], full[n]]
            # binary and arrays are indexed from 1
            row.append(binary[n - 1] if n >= 1 else "")
            row.append(arrays[n - 1] if n >= 1 else "")
            writer.writerow(row)
    return out


def write_report(out_dir, n_geometry: int = 8, n_sequences: int = 30) -> list:
    """Render the standard report files into ``out_dir``; returns their paths."""
    if n_geometry < 0 or n_geometry > 16:
        raise ValueError("figure generations must be within 0..16")
    if n_sequences < 1:
        raise ValueError("need at least one sequence row")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = [
        _curve_panels(plt, out, n_geometry),
        _boundary_panels(plt, out, n_geometry),
        _growth_plot(plt, out, n_sequences),
        _sequence_csv(out, n_sequences),
    ]
    return [str(p) for p in written]
