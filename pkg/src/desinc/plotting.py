"""Convergence figure rendering for benchmark rows."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .cli import ExperimentRow
from .testfns import Method

__all__ = ["render_convergence"]

_MARKERS = {Method.T21: "s", Method.T22: "o", Method.T23: "^"}


def render_convergence(rows: list[ExperimentRow], out_dir: str) -> str:
    """Render observed errors and bounds versus n on a log error axis.

    Writes <function>_convergence.png into out_dir and returns its path.
    """
    if not rows:
        raise ValueError("no rows to plot")
    function = rows[0].function

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for method in Method:
        sub = [r for r in rows if r.method is method]
        if not sub:
            continue
        ns = [r.n for r in sub]
        ax.semilogy(
            ns,
            [r.observed_max_error for r in sub],
            marker=_MARKERS[method],
            markersize=4,
            label=f"observed ({method.value})",
        )
        bounded = [r for r in sub if r.error_bound is not None]
        if bounded:
            ax.semilogy(
                [r.n for r in bounded],
                [r.error_bound for r in bounded],
                linestyle="--",
                label=f"bound ({method.value})",
            )
    ax.set_xlabel("n")
    ax.set_ylabel("maximum error")
    ax.set_title(f"{function.value}: observed error vs. a-priori bound")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()

    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{function.value}_convergence.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
