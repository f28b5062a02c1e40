"""
Weighted l1 minimization

    min_z  sum_i w_i |z_i|  subject to  A z = y

solved as the standard-form LP over the split z = u - v with u, v >= 0.
Plain l1 minimization is the w = 1 case. Ground-truth comparison
(``check_exact``) and uniqueness testing (``is_unique_minimizer``) sit on top
of the solver and never change it.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field

from errors import ArgumentError, DegenerateRecoveryError, RecoveryInfeasibleError
from recovery.weights import WeightVector
from sensing.types import as_dense_matrix
from simplex import LpSolution, LpStatus, SolverSettings, StandardLp, solve_lp

logger = logging.getLogger(__name__)


class RecoverySettings(BaseModel):
    success_tol: float = Field(1e-4, gt=0)
    uniq_tol: float = Field(1e-7, gt=0)
    # slack on the weighted-norm budget of the optimal face scan
    face_tol: float = Field(1e-10, gt=0)
    # reduced costs above this certify a unique optimum
    certificate_tol: float = Field(1e-8, gt=0)
    solver: SolverSettings = Field(default_factory=SolverSettings)


DEFAULT_SETTINGS = RecoverySettings()


@dataclass(frozen=True)
class RecoveryResult:
    recovered: np.ndarray
    weighted_norm: float
    exact: bool
    relative_error: float
    iterations: int
    lp: Optional[LpSolution] = None

    @property
    def has_truth(self) -> bool:
        return not np.isnan(self.relative_error)


def relative_error(recovered, truth) -> float:
    truth = np.asarray(truth, dtype=np.float64)
    return float(np.linalg.norm(np.asarray(recovered) - truth) / max(np.linalg.norm(truth), 1e-300))


def check_exact(recovered, truth, success_tol: float = 1e-4) -> bool:
    """True iff ||recovered - truth||_2 / max(||truth||_2, 1e-300) <= success_tol."""
    recovered = np.asarray(recovered, dtype=np.float64)
    truth = np.asarray(truth, dtype=np.float64)
    if recovered.shape != truth.shape:
        raise ArgumentError(f"Length mismatch: {recovered.shape} vs {truth.shape}")
    return relative_error(recovered, truth) <= success_tol


def _validate(a, y, weights: WeightVector):
    a = as_dense_matrix(a)
    y = np.asarray(y, dtype=np.float64).ravel()
    m, n = a.shape
    if y.shape[0] != m:
        raise ArgumentError(f"Measurements have length {y.shape[0]}, expected {m}")
    if weights.n != n:
        raise ArgumentError(f"Weights have length {weights.n}, expected {n}")
    return a, y


def has_zero_weight_kernel(a: np.ndarray, weights: WeightVector) -> bool:
    """True when some nonzero kernel vector of A lives on the zero-weight set."""
    zero = weights.zero_set()
    if zero.size == 0:
        return False
    return np.linalg.matrix_rank(a[:, zero]) < zero.size


def split_lp(a: np.ndarray, y: np.ndarray, weights: WeightVector) -> StandardLp:
    w = weights.weights
    return StandardLp(objective=np.concatenate([w, w]),
                      eq_matrix=np.hstack([a, -a]),
                      eq_rhs=y)


def solve_weighted_l1(a, y, weights: WeightVector, truth=None,
                      settings: RecoverySettings = DEFAULT_SETTINGS) -> RecoveryResult:
    """
    Minimize the weighted l1 norm subject to A z = y.

    Raises RecoveryInfeasibleError when y is outside the range of A and
    DegenerateRecoveryError when zero weights leave the minimizers unbounded.
    ``relative_error`` is NaN unless ``truth`` is supplied.
    """
    a, y = _validate(a, y, weights)
    n = a.shape[1]
    if has_zero_weight_kernel(a, weights):
        raise DegenerateRecoveryError(
            f"A has a kernel vector supported on the {weights.zero_set().size} zero-weight coordinates")

    solution = solve_lp(split_lp(a, y, weights), settings=settings.solver)
    if solution.status is LpStatus.INFEASIBLE:
        raise RecoveryInfeasibleError("Measurements are not in the range of A")
    if solution.status is LpStatus.UNBOUNDED:
        raise DegenerateRecoveryError("Weighted l1 LP is unbounded")

    recovered = solution.point[:n] - solution.point[n:]
    residual = float(np.abs(a @ recovered - y).max())
    if residual > settings.solver.feas_tol * (1.0 + float(np.abs(y).max())):
        logger.warning(f"⚠️  Recovery residual {residual:.2e} exceeds tolerance")

    if truth is None:
        error = float("nan")
        exact = False
    else:
        truth = np.asarray(truth, dtype=np.float64)
        if truth.shape != recovered.shape:
            raise ArgumentError(f"Truth has shape {truth.shape}, expected {recovered.shape}")
        error = relative_error(recovered, truth)
        exact = error <= settings.success_tol

    return RecoveryResult(recovered=recovered,
                          weighted_norm=weights.norm(recovered),
                          exact=exact,
                          relative_error=error,
                          iterations=solution.iterations,
                          lp=solution)


def solve_l1(a, y, truth=None, settings: RecoverySettings = DEFAULT_SETTINGS) -> RecoveryResult:
    """Plain l1 minimization: ``solve_weighted_l1`` with all weights 1."""
    a = as_dense_matrix(a)
    return solve_weighted_l1(a, y, WeightVector.uniform(a.shape[1]), truth=truth, settings=settings)


def _dual_certificate(solution: LpSolution, weights: WeightVector, tol: float) -> bool:
    """
    Strictly positive reduced costs on every nonbasic column force a unique
    optimum. The one exception is the u/v twin of a basic zero-weight
    coordinate: its reduced cost is 0 but moving along it leaves z unchanged.
    """
    n = weights.n
    basic = np.zeros(2 * n, dtype=bool)
    basic[solution.basis[solution.basis < 2 * n]] = True
    twins = np.concatenate([np.arange(n, 2 * n), np.arange(n)])
    zero_weight = np.concatenate([weights.weights, weights.weights]) == 0.0
    harmless = basic[twins] & zero_weight
    nonbasic = ~basic & ~harmless
    return bool(np.all(solution.reduced_costs[nonbasic] > tol))


def _face_extremes(a, y, weights: WeightVector, budget: float, settings: RecoverySettings):
    """Yield (j, max z_j, min z_j) over {A z = y, ||z||_w <= budget}."""
    m, n = a.shape
    w = weights.weights
    eq_matrix = np.vstack([
        np.hstack([a, -a, np.zeros((m, 1))]),
        np.concatenate([w, w, [1.0]])[None, :],
    ])
    eq_rhs = np.concatenate([y, [budget]])
    for j in range(n):
        extremes = []
        for sense in (-1.0, 1.0):
            objective = np.zeros(2 * n + 1)
            objective[j] = sense
            objective[n + j] = -sense
            solution = solve_lp(StandardLp(objective, eq_matrix, eq_rhs), settings=settings.solver)
            if not solution.is_optimal:
                extremes.append(None)
                continue
            extremes.append(solution.point[j] - solution.point[n + j])
        yield j, extremes[0], extremes[1]


def is_unique_minimizer(a, y, weights: WeightVector, candidate,
                        settings: RecoverySettings = DEFAULT_SETTINGS) -> bool:
    """
    True iff no feasible z with weighted norm at most that of ``candidate``
    differs from it by more than uniq_tol in the max norm.

    The weighted l1 LP is solved once; when its optimum coincides with the
    candidate and the optimal basis carries a strict dual certificate the
    answer is immediate. Otherwise every coordinate is maximized and
    minimized over the (slightly relaxed) optimal face.
    """
    a, y = _validate(a, y, weights)
    candidate = np.asarray(candidate, dtype=np.float64).ravel()
    if candidate.shape[0] != a.shape[1]:
        raise ArgumentError(f"Candidate has length {candidate.shape[0]}, expected {a.shape[1]}")
    residual = float(np.abs(a @ candidate - y).max())
    if residual > settings.solver.feas_tol * (1.0 + float(np.abs(y).max())):
        raise ArgumentError(f"Candidate is infeasible: residual {residual:.2e}")

    if has_zero_weight_kernel(a, weights):
        return False

    deviation_tol = settings.uniq_tol
    result = solve_weighted_l1(a, y, weights, settings=settings)
    if np.abs(result.recovered - candidate).max() > deviation_tol:
        logger.debug("LP optimum differs from candidate")
        return False
    if _dual_certificate(result.lp, weights, settings.certificate_tol):
        return True

    candidate_norm = weights.norm(candidate)
    budget = candidate_norm + settings.face_tol * (1.0 + candidate_norm)
    for j, upper, lower in _face_extremes(a, y, weights, budget, settings):
        if upper is None or lower is None:
            return False
        if upper - candidate[j] > deviation_tol or candidate[j] - lower > deviation_tol:
            logger.debug(f"Coordinate {j} moves within the optimal face: [{lower:.3e}, {upper:.3e}]")
            return False
    return True
