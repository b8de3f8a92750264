"""Figure rendering for CLI reports.

Imported lazily by the CLI (matplotlib startup is slow) and always writes to
files via the Agg backend; nothing here opens a window.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import NonnegFn
from .extremal import BoundReport


def _stem(ax, f: NonnegFn, color: str, label: str, offset: float = 0.0) -> None:
    xs = [i + offset for i in f.indices()]
    ys = [float(f[i]) for i in f.indices()]
    ax.vlines(xs, 0, ys, colors=color, lw=2, alpha=0.8)
    ax.plot(xs, ys, "o", color=color, ms=4, label=label)


def save_bound_report(report: BoundReport, path: str) -> None:
    """Side-by-side masses of both sides plus the per-order entropy pairs."""
    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.4))
    _stem(ax0, report.lhs, "tab:blue", "convolution", offset=-0.08)
    _stem(ax0, report.extremal, "tab:red", "extremal", offset=0.08)
    ax0.set_xlabel("index")
    ax0.set_ylabel("mass")
    ax0.legend(fontsize=8)
    ax0.set_title("distributions", fontsize=10)

    labels = [str(a) for a in report.entropies]
    lhs = [pair[0] for pair in report.entropies.values()]
    rhs = [pair[1] for pair in report.entropies.values()]
    xs = range(len(labels))
    ax1.plot(xs, lhs, "o-", color="tab:blue", label="H(convolution)")
    ax1.plot(xs, rhs, "s--", color="tab:red", label="H(extremal)")
    ax1.set_xticks(list(xs))
    ax1.set_xticklabels(labels)
    ax1.set_xlabel("order")
    ax1.set_ylabel("entropy (nats)")
    ax1.legend(fontsize=8)
    ax1.set_title("entropies by order", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_kanter_sweep(
    xs: list[float], gs: list[float], envelope: list[float], path: str
) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.4))
    ax.plot(xs, gs, color="tab:blue", label="G(x)")
    ax.plot(xs, envelope, color="tab:gray", ls="--", label="sqrt(2/(pi x))")
    ax.set_xlabel("x")
    ax.set_ylabel("value")
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_gap_sweep(
    ns: list[int], gaps: list[float], estimates: list[float], path: str
) -> None:
    fig, ax = plt.subplots(figsize=(6, 3.4))
    ax.plot(ns, gaps, color="tab:blue", label="doubling gap")
    ax.plot(ns, estimates, color="tab:red", ls="--", label="lower estimate")
    ax.axhline(0.5, color="tab:gray", lw=0.8, ls=":")
    ax.set_xscale("log")
    ax.set_xlabel("support size n")
    ax.set_ylabel("nats")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
