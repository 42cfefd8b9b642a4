"""Matplotlib figures written next to the delimited output of the CLI."""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "figure.figsize": (7.0, 5.0),
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.0,
    "lines.markersize": 3,
}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_sequence(a: int, ns: Sequence[int], values: Sequence[int], slope: Fraction, path) -> Path:
    """``P(n)`` against the line ``(R/Q) n``, and the periodic residue below it."""
    ns = np.asarray(ns)
    vals = np.asarray(values, dtype=float)
    trend = float(slope) * ns
    with plt.rc_context(STYLE):
        fig, (top, bottom) = plt.subplots(2, 1, sharex=True, height_ratios=(2, 1))
        top.plot(ns, vals, "o", label="P(n)")
        top.plot(ns, trend, "-", label=f"({slope.numerator}/{slope.denominator}) n")
        top.set_ylabel("P(n)")
        top.set_title(f"integers coprime to {a}")
        top.legend(loc="upper left")
        bottom.step(ns, vals - trend, where="mid")
        bottom.set_xlabel("n")
        bottom.set_ylabel("P(n) - (R/Q) n")
        return _save(fig, path)


def plot_coefficients(a: int, coeffs: np.ndarray, residues: Sequence[Fraction], path) -> Path:
    """Magnitudes of the Fourier coefficients and one period of the residue."""
    coeffs = np.asarray(coeffs)
    p = coeffs.size
    with plt.rc_context(STYLE):
        fig, (left, right) = plt.subplots(1, 2, figsize=(10.0, 4.0))
        left.stem(np.arange(p), np.abs(coeffs), basefmt=" ")
        left.set_xlabel("frequency index v")
        left.set_ylabel("|c_v|")
        left.set_title(f"a = {a}, period {p}")
        m = np.arange(-p + 1, 1)
        right.plot(m, [float(r) for r in residues], ".-")
        right.set_xlabel("m")
        right.set_ylabel("P(m) - (R/Q) m")
        right.set_title("residue table")
        return _save(fig, path)
