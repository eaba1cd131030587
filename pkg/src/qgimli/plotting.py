"""Figures for resource sweeps. Uses the Agg backend; everything goes to files."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from qgimli.report import SweepRow  # noqa: E402


def _style(ax, xlabel, ylabel):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8, frameon=False)


def plot_depth_vs_rounds(rows: list[SweepRow], path) -> str:
    fig, ax = plt.subplots(figsize=(6, 4))
    for n in sorted({row.word_len for row in rows}):
        sel = sorted((row for row in rows if row.word_len == n), key=lambda row: row.rounds)
        rs = [row.rounds for row in sel]
        line, = ax.plot(rs, [row.depth for row in sel], "o-", label=f"depth, word_len={n}")
        ax.plot(rs, [row.depth_bound for row in sel], "--", color=line.get_color(), alpha=0.6,
                label=f"5*l*r + r/4, word_len={n}")
    _style(ax, "rounds", "circuit depth")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return str(path)


def plot_counts_vs_word_len(rows: list[SweepRow], path, rounds: int | None = None) -> str:
    if rounds is None:
        rounds = max(row.rounds for row in rows)
    sel = sorted((row for row in rows if row.rounds == rounds), key=lambda row: row.word_len)
    ns = [row.word_len for row in sel]
    fig, ax = plt.subplots(figsize=(6, 4))
    for kind in ("X", "CNOT", "CCNOT", "total"):
        ax.plot(ns, [getattr(row, kind) for row in sel], "o-", label=kind)
    ax.set_title(f"{rounds} rounds", fontsize=10)
    _style(ax, "word length", "gate count")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return str(path)


def render_sweep(rows: list[SweepRow], out_dir) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    return [
        plot_depth_vs_rounds(rows, os.path.join(out_dir, "depth_vs_rounds.png")),
        plot_counts_vs_word_len(rows, os.path.join(out_dir, "counts_vs_word_len.png")),
    ]
