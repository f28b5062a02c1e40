"""Standard-form LP data, solver settings and solution records."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field

from errors import ArgumentError


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class SolverSettings(BaseModel):
    """Tolerances and limits for the revised simplex method."""
    feas_tol: float = Field(1e-9, gt=0)
    opt_tol: float = Field(1e-9, gt=0)
    pivot_tol: float = Field(1e-11, gt=0)
    max_iters: int = Field(50_000, ge=1)
    refactor_every: int = Field(64, ge=1)
    # consecutive degenerate pivots before switching to Bland's rule
    degenerate_switch: int = Field(12, ge=1)
    # columns priced exactly by steepest edge per iteration
    pricing_candidates: int = Field(48, ge=1)


@dataclass(frozen=True)
class StandardLp:
    """minimize c^T v subject to E v = f, v >= 0."""
    objective: np.ndarray
    eq_matrix: np.ndarray
    eq_rhs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=np.float64).ravel()
        e = np.atleast_2d(np.asarray(self.eq_matrix, dtype=np.float64))
        f = np.asarray(self.eq_rhs, dtype=np.float64).ravel()
        p, q = e.shape
        if c.shape[0] != q:
            raise ArgumentError(f"Objective has length {c.shape[0]}, expected {q}")
        if f.shape[0] != p:
            raise ArgumentError(f"Right-hand side has length {f.shape[0]}, expected {p}")
        if q < p:
            raise ArgumentError(f"Standard form needs at least as many variables as rows ({q} < {p})")
        if not (np.all(np.isfinite(c)) and np.all(np.isfinite(e)) and np.all(np.isfinite(f))):
            raise ArgumentError("LP data contains non-finite values")
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "eq_matrix", e)
        object.__setattr__(self, "eq_rhs", f)

    @property
    def shape(self):
        return self.eq_matrix.shape


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    objective_value: float
    iterations: int
    point: Optional[np.ndarray] = None
    # dual multipliers y of E v = f and reduced costs c - E^T y (optimal only)
    duals: Optional[np.ndarray] = None
    reduced_costs: Optional[np.ndarray] = None
    basis: Optional[np.ndarray] = None
    # improving direction (unbounded only)
    ray: Optional[np.ndarray] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL

    def dual_objective(self, lp: StandardLp) -> float:
        if self.duals is None:
            return float("nan")
        return float(self.duals @ lp.eq_rhs)
