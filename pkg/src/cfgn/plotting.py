"""Minimal SVG line plots for the experiment runner (matplotlib backend,
deterministic hash salt so repeated runs emit identical files)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("svg")
matplotlib.rcParams["svg.hashsalt"] = "cfgn"

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["line_plot"]


def line_plot(path, x, series, xlabel="", ylabel="", title="", loglog=False):
    """Write one SVG with the given named series.

    ``series`` is a list of (label, y, style) tuples; style "line" draws a
    solid line, "points" unconnected markers.
    """
    fig, ax = plt.subplots(figsize=(7, 4.2), dpi=100)
    for label, y, style in series:
        y = np.asarray(y)
        if loglog:
            y = np.abs(y)
        if style == "points":
            ax.plot(x, y, "o", ms=3, label=label)
        else:
            ax.plot(x, y, lw=1.2, label=label)
    if loglog:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(Path(path), metadata={"Date": None})
    plt.close(fig)
