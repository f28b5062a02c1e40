"""CSV and SVG output for phase-transition grids."""

import csv
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from errors import ParseError
from experiments.runner import PhaseGrid

logger = logging.getLogger(__name__)

CSV_HEADER = ["method", "alpha", "w", "m", "k", "trials", "successes", "degenerate", "rate"]

# fixed salt and no date keep SVG output reproducible
SVG_STYLE = {"svg.hashsalt": "wl1-phase", "svg.fonttype": "none"}
PANEL_SIZE = 3.2


def _real(value: Optional[float]) -> str:
    return "" if value is None else "%.17g" % value


def emit_csv(grids: Sequence[PhaseGrid], path) -> Path:
    """One row per cell that was run; reals with 17 significant digits, LF line endings."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for grid in grids:
            for m, k, trials, successes, degenerate, rate in grid.cells():
                writer.writerow([grid.method_label, _real(grid.alpha), _real(grid.weight),
                                 m, k, trials, successes, degenerate, _real(rate)])
    logger.info(f"📝 Wrote {len(grids)} grid(s) to {path}")
    return path


def read_csv(path) -> List[PhaseGrid]:
    """Rebuild grids from ``emit_csv`` output, in order of first appearance."""
    path = Path(path)
    groups: Dict[Tuple[str, str, str], List[tuple]] = {}
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise ParseError(path, 1, f"expected header {','.join(CSV_HEADER)}")
        for number, row in enumerate(reader, start=2):
            if len(row) != len(CSV_HEADER):
                raise ParseError(path, number, f"expected {len(CSV_HEADER)} fields, got {len(row)}")
            try:
                cell = (int(row[3]), int(row[4]), int(row[5]), int(row[6]), int(row[7]))
            except ValueError as e:
                raise ParseError(path, number, str(e)) from None
            groups.setdefault((row[0], row[1], row[2]), []).append(cell)

    grids = []
    for (label, alpha, weight), cells in groups.items():
        m_values = np.array(sorted({c[0] for c in cells}), dtype=np.int64)
        k_values = np.array(sorted({c[1] for c in cells}), dtype=np.int64)
        shape = (m_values.size, k_values.size)
        trials_run = np.zeros(shape, dtype=np.int64)
        successes = np.zeros(shape, dtype=np.int64)
        degenerate = np.zeros(shape, dtype=np.int64)
        for m, k, trials, success, degen in cells:
            i, j = np.searchsorted(m_values, m), np.searchsorted(k_values, k)
            trials_run[i, j], successes[i, j], degenerate[i, j] = trials, success, degen
        grids.append(PhaseGrid(label, float(alpha) if alpha else None, float(weight) if weight else None,
                               m_values, k_values, trials_run, successes, degenerate))
    return grids



def _index_position(values: np.ndarray, value: float) -> float:
    return float(np.interp(value, values, np.arange(values.size)))


def _panel(ax, grid: PhaseGrid, curve, reference):
    """Heatmap over cell indices, m to the right and k upwards; black is 0, white is 1."""
    m_count, k_count = grid.m_values.size, grid.k_values.size
    rates = np.ma.masked_invalid(grid.rates)
    ax.pcolormesh(np.arange(m_count + 1) - 0.5, np.arange(k_count + 1) - 0.5, rates.T,
                  cmap="gray", vmin=0.0, vmax=1.0)

    for points, style in ((curve, dict(color="red", linestyle="--")),
                          (reference, dict(color="green"))):
        if not points:
            continue
        xs = [_index_position(grid.m_values, m) for m, _ in points]
        ys = [_index_position(grid.k_values, k) for _, k in points]
        ax.plot(xs, ys, linewidth=2, **style)

    k_every = max(1, k_count // 8)
    ax.set_xticks(np.arange(m_count))
    ax.set_xticklabels([str(int(m)) for m in grid.m_values])
    ax.set_yticks(np.arange(0, k_count, k_every))
    ax.set_yticklabels([str(int(k)) for k in grid.k_values[::k_every]])
    ax.set_xlim(-0.5, m_count - 0.5)
    ax.set_ylim(-0.5, k_count - 0.5)
    ax.set_xlabel("m")
    ax.set_ylabel("k")
    ax.set_title(grid.title, fontsize=9)


def render_figure(grids: Sequence[PhaseGrid], curves: Sequence[Sequence[Tuple[float, float]]],
                  references: Optional[Sequence[Sequence[Tuple[float, float]]]] = None) -> Figure:
    """
    Grayscale heatmaps side by side.

    ``curves`` holds one threshold curve per grid (drawn red, dashed),
    ``references`` optionally one reference line per grid (drawn green).
    """
    references = references or [[] for _ in grids]
    fig = Figure(figsize=(PANEL_SIZE * max(len(grids), 1), PANEL_SIZE))
    if grids:
        axes = fig.subplots(1, len(grids), squeeze=False)[0]
        for ax, grid, curve, reference in zip(axes, grids, curves, references):
            _panel(ax, grid, curve, reference)
    fig.tight_layout()
    return fig


def emit_svg(grids: Sequence[PhaseGrid], curves: Sequence[Sequence[Tuple[float, float]]], path,
             references: Optional[Sequence[Sequence[Tuple[float, float]]]] = None) -> Path:
    """Write ``render_figure`` as SVG; byte-identical for identical inputs."""
    path = Path(path)
    with matplotlib.rc_context(SVG_STYLE):
        fig = render_figure(grids, curves, references)
        fig.savefig(path, format="svg", metadata={"Date": None})
    logger.info(f"🖼️  Wrote {len(grids)} panel(s) to {path}")
    return path
