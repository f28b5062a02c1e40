"""
Monte-Carlo phase-transition runs.

Each trial at cell (m, k) draws A and x from derive_seed(base, m, k, t), so
plain l1 and every weighted run at that trial see the same instance. The
support estimate for accuracy index j comes from derive_seed(base, m, k, j, t).
Cells are independent tasks; results are merged in cell order, so the grids
do not depend on the number of workers.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from errors import DegeneracyError, IterationLimitError
from experiments.config import ExperimentConfig
from recovery import WeightVector, solve_l1, solve_weighted_l1
from sensing import (Rng, derive_seed, gen_gaussian_matrix, gen_sparse_signal,
                     gen_support_estimate)

logger = logging.getLogger(__name__)

L1_LABEL = "l1"
WEIGHTED_LABEL = "weighted_l1"


@dataclass(frozen=True)
class PhaseGrid:
    """
    Recovery counts over the (m, k) plane for one method.

    Rows follow ``m_values``, columns the union ``k_values`` of every m's k
    grid; cells outside an m's grid have ``trials_run`` 0 and a NaN rate.
    """
    method_label: str
    alpha: Optional[float]
    weight: Optional[float]
    m_values: np.ndarray
    k_values: np.ndarray
    trials_run: np.ndarray
    successes: np.ndarray
    degenerate: np.ndarray

    @property
    def rates(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(self.trials_run > 0, self.successes / self.trials_run, np.nan)

    def cells(self):
        """Yield (m, k, trials, successes, degenerate, rate) for every cell that was run."""
        rates = self.rates
        for i, m in enumerate(self.m_values):
            for j, k in enumerate(self.k_values):
                if self.trials_run[i, j] > 0:
                    yield (int(m), int(k), int(self.trials_run[i, j]), int(self.successes[i, j]),
                           int(self.degenerate[i, j]), float(rates[i, j]))

    @property
    def title(self) -> str:
        if self.alpha is None:
            return "l1"
        return f"weighted l1, alpha={self.alpha:g}, w={self.weight:g}"


@dataclass(frozen=True)
class CellResult:
    m_index: int
    k: int
    # per method (baseline first when present): (successes, degenerate)
    counts: Tuple[Tuple[int, int], ...]


def _attempt(solve) -> Tuple[bool, bool]:
    """Run one recovery; returns (exact, degenerate)."""
    try:
        return solve().exact, False
    except DegeneracyError as e:
        logger.warning(f"⚠️  Degenerate trial counted as failure: {e}")
        return False, True
    except IterationLimitError as e:
        logger.warning(f"⚠️  Solver gave up, trial counted as failure: {e}")
        return False, True


def run_cell(config: ExperimentConfig, m_index: int, k: int) -> CellResult:
    m = config.m_values[m_index]
    methods = (1 if config.include_baseline else 0) + len(config.alphas)
    successes = [0] * methods
    degenerate = [0] * methods
    for t in range(config.trials):
        rng = Rng(derive_seed(config.base_seed, m, k, t))
        a = gen_gaussian_matrix(m, config.N, rng)
        instance = gen_sparse_signal(config.N, k, rng).measure(a)
        outcomes = []
        if config.include_baseline:
            outcomes.append(_attempt(lambda: solve_l1(a, instance.measurements, truth=instance.signal)))
        for j, alpha in enumerate(config.alphas):
            estimate_rng = Rng(derive_seed(config.base_seed, m, k, j, t))
            estimate = gen_support_estimate(instance, alpha, config.rho, config.weight_for(alpha), estimate_rng)
            weights = WeightVector.from_estimate(estimate, config.N)
            outcomes.append(_attempt(lambda: solve_weighted_l1(
                a, instance.measurements, weights, truth=instance.signal)))
        for index, (exact, degen) in enumerate(outcomes):
            successes[index] += int(exact)
            degenerate[index] += int(degen)
    return CellResult(m_index, k, tuple(zip(successes, degenerate)))


def _run_cell_task(args) -> CellResult:
    return run_cell(*args)


def default_threads() -> int:
    return os.cpu_count() or 1


def run_phase(config: ExperimentConfig, threads: Optional[int] = None) -> List[PhaseGrid]:
    """
    Run every (m, k) cell of ``config``.

    Returns one PhaseGrid per accuracy in ``alphas``, preceded by the l1
    baseline when ``include_baseline`` is set. Output is identical for any
    ``threads`` value.
    """
    threads = threads or default_threads()
    k_grid = {i: config.k_values(m) for i, m in enumerate(config.m_values)}
    k_values = np.array(sorted({k for ks in k_grid.values() for k in ks}), dtype=np.int64)
    tasks = [(config, i, k) for i in sorted(k_grid) for k in k_grid[i]]
    logger.info(f"🚀 Phase run: N={config.N}, {len(tasks)} cells x {config.trials} trials, "
                f"alphas={config.alphas}, threads={threads}")

    if threads == 1 or len(tasks) <= 1:
        results = [_run_cell_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_cell_task, tasks, chunksize=1))

    methods = [(L1_LABEL, None, None)] if config.include_baseline else []
    methods += [(WEIGHTED_LABEL, alpha, config.weight_for(alpha)) for alpha in config.alphas]
    shape = (len(config.m_values), k_values.size)
    column = {int(k): j for j, k in enumerate(k_values)}
    grids = []
    for index, (label, alpha, weight) in enumerate(methods):
        trials_run = np.zeros(shape, dtype=np.int64)
        successes = np.zeros(shape, dtype=np.int64)
        degenerate = np.zeros(shape, dtype=np.int64)
        for result in results:
            j = column[result.k]
            trials_run[result.m_index, j] = config.trials
            successes[result.m_index, j], degenerate[result.m_index, j] = result.counts[index]
        grids.append(PhaseGrid(label, alpha, weight, np.array(config.m_values, dtype=np.int64),
                               k_values, trials_run, successes, degenerate))
        logger.info(f"✅ {grids[-1].title}: {int(successes.sum())}/{int(trials_run.sum())} exact, "
                    f"{int(degenerate.sum())} degenerate")
    return grids
