import math
from typing import List, Tuple

import numpy as np

from experiments.runner import PhaseGrid


def threshold_curve(grid: PhaseGrid, threshold: float) -> List[Tuple[int, int]]:
    """
    (m, k*) pairs where k* is the largest grid k at m whose rate, and the rate
    of every smaller grid k at m, reaches ``threshold``. An m with no
    qualifying k is left out.
    """
    curve = []
    rates = grid.rates
    for i, m in enumerate(grid.m_values):
        k_star = None
        for j, k in enumerate(grid.k_values):
            if grid.trials_run[i, j] == 0:
                continue
            if rates[i, j] < threshold:
                break
            k_star = int(k)
        if k_star is not None:
            curve.append((int(m), k_star))
    return curve


def reference_line(N: int, k: float, alpha: float, rho: float) -> float:
    """m = k + s ln(N/s) with s = (1 + rho - 2 alpha rho) k; k + 1 when s < 1."""
    s = (1.0 + rho - 2.0 * alpha * rho) * k
    if s < 1.0:
        return k + 1.0
    return k + s * math.log(N / s)


def reference_curve(grid: PhaseGrid, N: int, rho: float) -> List[Tuple[float, int]]:
    """Reference (m, k) points over the grid's k axis that fall inside its m range."""
    if grid.alpha is None or grid.k_values.size == 0:
        return []
    lo, hi = float(np.min(grid.m_values)), float(np.max(grid.m_values))
    points = []
    for k in grid.k_values:
        m = reference_line(N, int(k), grid.alpha, rho)
        if lo <= m <= hi:
            points.append((m, int(k)))
    return points
