"""Report rendering: delimited tables and matplotlib figures written to files.

The CLI's reporting paths emit a tab-separated table and, on request, a PNG
figure next to it; figures always go through the Agg backend so batch runs
need no display.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path


def _cell(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def write_delimited(path, header, rows, sep="\t") -> None:
    lines = [sep.join(header)]
    for row in rows:
        lines.append(sep.join(_cell(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_tradeoff(rows, path) -> None:
    """Exponent and exponent/witness-factor ratio against the iteration
    depth k, with the alpha-1 floor the ratio approaches."""
    plt = _pyplot()
    ks = [r.k for r in rows]
    exponents = [float(r.exponent) for r in rows]
    ratios = [float(r.ratio) for r in rows]
    alpha = float(rows[0].alpha)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.plot(ks, exponents, marker="o", color="tab:blue")
    ax1.set_xlabel("k")
    ax1.set_ylabel("runtime exponent")
    ax1.set_title(f"alpha = {alpha:g}")
    ax2.plot(ks, ratios, marker="o", color="tab:orange",
             label="exponent / witness factor")
    ax2.axhline(alpha - 1, color="gray", linestyle="--",
                label="alpha - 1 limit")
    ax2.set_xlabel("k")
    ax2.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_family(report, path) -> None:
    """Gate counts of the compiled circuit family from a decide run."""
    plt = _pyplot()
    ks = [r.index for r in report.family]
    gates = [r.gates for r in report.family]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.bar(ks, gates, color="tab:green")
    ax.set_xlabel("exposed placeholders i")
    ax.set_ylabel("gates in C_i")
    ax.set_yscale("log")
    if report.sat_index is not None:
        ax.axvline(report.sat_index, color="tab:red", linestyle="--",
                   label=f"satisfiable at i = {report.sat_index}")
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
