"""Deterministic figure rendering.

Plotted arrays are the CSV values untouched (the tests extract them
back off the artists and compare exactly); the only transformations are
the axis scales requested by the spec.  SVG output is made reproducible
by pinning the hash salt and dropping the date metadata.
"""

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "vdwplot"

import matplotlib.pyplot as plt
import numpy as np

from .csvdata import read_csv

_REGIME_TINTS = {"short": "0.92", "intermediate": "none", "long": "0.96"}


def _shade_regimes(ax, dataset, x_col):
    regimes = dataset["regime"]
    xs = dataset[x_col]
    start = 0
    for i in range(1, len(xs) + 1):
        if i == len(xs) or regimes[i] != regimes[start]:
            tint = _REGIME_TINTS.get(str(regimes[start]), "none")
            if tint != "none":
                ax.axvspan(xs[start], xs[i - 1], color=tint, zorder=0)
            start = i


def _render_panel(ax, panel):
    datasets = [read_csv(p) for p in panel.csv_paths]
    y_unit = None
    for k, dataset in enumerate(datasets):
        xs = dataset[panel.x]
        stem = dataset.path.rsplit("/", 1)[-1].removesuffix(".csv")
        prefix = panel.labels[k] if len(panel.labels) == len(datasets) \
            else (stem if len(datasets) > 1 else "")
        for y_col in panel.y:
            label = f"{prefix}:{y_col}" if prefix else y_col
            ax.plot(xs, dataset[y_col], label=label, linewidth=1.0)
            y_unit = dataset.unit_of(y_col)
    if panel.xscale == "log":
        ax.set_xscale("log")
    if panel.yscale == "log":
        ax.set_yscale("log")
    for marker in panel.lambda_markers:
        ax.axvline(marker, color="0.6", linestyle=":", linewidth=0.8)
    if panel.regime_shading and "regime" in datasets[0].columns:
        _shade_regimes(ax, datasets[0], panel.x)
    if panel.annotate_peak:
        xs = datasets[0][panel.x]
        ys = datasets[0][panel.y[0]]
        i = int(np.argmax(np.abs(ys)))
        ax.plot([xs[i]], [ys[i]], "o", markersize=4, color="crimson")
        ax.annotate(f"peak {ys[i]:.2e} @ {xs[i]:.3g}",
                    (xs[i], ys[i]), textcoords="offset points",
                    xytext=(6, 6), fontsize=7)
    ax.set_xlabel(f"{panel.x} [{datasets[0].unit_of(panel.x)}]"
                  if datasets[0].unit_of(panel.x) != "1" else panel.x)
    ax.set_ylabel(f"[{y_unit}]" if y_unit and y_unit != "1" else "")
    if panel.title:
        ax.set_title(panel.title, fontsize=9)
    ax.legend(fontsize=7)
    ax.axhline(0.0, color="0.8", linewidth=0.6, zorder=0)


def render(spec):
    """Render a PlotSpec; returns the list of files written.

    Every input CSV is read (and validated) before any file is opened
    for writing, so a bad input never leaves a partial image behind.
    """
    for panel in spec.panels:
        for path in panel.csv_paths:
            dataset = read_csv(path)
            for col in (panel.x, *panel.y):
                dataset[col]   # raises DataError naming the columns

    n = len(spec.panels)
    rows, cols = spec.layout if spec.layout else (n, 1)
    fig, axes = plt.subplots(rows, cols,
                             figsize=(4.2 * cols, 2.9 * rows),
                             squeeze=False)
    flat = axes.ravel()
    for ax, panel in zip(flat, spec.panels):
        _render_panel(ax, panel)
    for ax in flat[n:]:
        ax.set_axis_off()
    if spec.suptitle:
        fig.suptitle(spec.suptitle, fontsize=10)
    fig.tight_layout()

    written = []
    for fmt in spec.formats:
        path = f"{spec.output}.{fmt}"
        metadata = {"Date": None} if fmt == "svg" else None
        fig.savefig(path, format=fmt, dpi=150, metadata=metadata)
        written.append(path)
    plt.close(fig)
    return written
