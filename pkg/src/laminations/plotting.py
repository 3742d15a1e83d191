"""Figures for the compactification report.

matplotlib is optional (``pip install artifact[plot]``); it is imported
lazily and forced onto the non-interactive Agg backend.
"""
from __future__ import annotations

import csv
from pathlib import Path

from .compactify import DirectionReport


def have_matplotlib() -> bool:
    try:
        import matplotlib  # noqa: F401
    except ImportError:
        return False
    return True


def write_csv(report: DirectionReport, path: Path) -> Path:
    labels = list(report.labels) or [f"x{i}" for i in range(len(report.normalized_log_coords[0]))]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["s", *labels, "deviation"])
        devs = report.euclidean_deviations or [""] * len(report.s_values)
        for s, row, d in zip(report.s_values, report.normalized_log_coords, devs):
            w.writerow([repr(s), *(repr(x) for x in row), repr(d) if d != "" else ""])
    return path


def write_gnuplot(report: DirectionReport, csv_path: Path, path: Path) -> Path:
    ncols = len(report.normalized_log_coords[0])
    plots = [f"'{csv_path.name}' using 1:{k + 2} with linespoints title '{lab}'"
             for k, lab in enumerate(report.labels or [f"x{i}" for i in range(ncols)])]
    lines = [
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set xlabel 's'",
        "set ylabel 'normalized log coordinate'",
        "plot " + ", \\\n     ".join(plots),
    ]
    path.write_text("\n".join(lines) + "\n")
    return path


def plot_direction(report: DirectionReport, path: Path) -> Path:
    """Two panels: normalized log coordinates against s, and the deviation on a log scale."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = report.labels or tuple(f"x{i}" for i in range(len(report.normalized_log_coords[0])))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6), constrained_layout=True)
    cols = list(zip(*report.normalized_log_coords))
    for k, (lab, ys) in enumerate(zip(labels, cols)):
        line, = ax1.plot(report.s_values, ys, marker="o", ms=3, lw=1.2, label=lab)
        if report.tropical_direction is not None:
            ax1.axhline(report.tropical_direction[k], color=line.get_color(), ls=":", lw=0.8)
    ax1.set_xlabel("s")
    ax1.set_ylabel("normalized log coordinate")
    ax1.legend(frameon=False, fontsize=8)
    if report.euclidean_deviations:
        ax2.semilogy(report.s_values, report.euclidean_deviations, marker="o", ms=3, color="k", lw=1.2)
        ax2.set_ylabel("distance to tropical direction")
    else:
        ax2.text(0.5, 0.5, "zero lamination", ha="center", va="center", transform=ax2.transAxes)
    ax2.set_xlabel("s")
    for ax in (ax1, ax2):
        ax.spines[["top", "right"]].set_visible(False)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_report(report: DirectionReport, outdir: Path, stem: str = "compactify") -> dict[str, str]:
    """CSV, gnuplot script and (when matplotlib is available) a PNG; returns the written paths."""
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = write_csv(report, outdir / f"{stem}.csv")
    out = {"csv": str(csv_path), "gnuplot": str(write_gnuplot(report, csv_path, outdir / f"{stem}.gp"))}
    if have_matplotlib():
        out["png"] = str(plot_direction(report, outdir / f"{stem}.png"))
    return out
