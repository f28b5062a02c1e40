"""Queries, settings and certificates for null space property constants."""

from dataclasses import dataclass
from enum import Enum
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, Field

from errors import ArgumentError
from sensing.types import as_index_set, symmetric_difference
from simplex import SolverSettings


class NspMode(str, Enum):
    STANDARD = "standard"
    NONUNIFORM = "nonuniform"
    UNIFORM = "uniform"
    UNIFORM_STAR = "uniform_star"


class NspSettings(BaseModel):
    method: Literal["circuit", "orthant"] = "circuit"
    # largest N for which exact enumeration is attempted
    orthant_cap: int = Field(18, ge=1)
    # maximum number of orthant LPs per query
    lp_budget: int = Field(2_000_000, ge=1)
    solver: SolverSettings = Field(default_factory=SolverSettings)


DEFAULT_NSP_SETTINGS = NspSettings()

# entries of a unit-max-norm null vector below this are structural zeros
ZERO_TOL = 1e-11


@dataclass(frozen=True)
class NspQuery:
    mode: NspMode
    weight: float
    k: int = 0
    s: int = 0
    fixed_T: Optional[np.ndarray] = None
    fixed_T_tilde: Optional[np.ndarray] = None

    def __post_init__(self):
        object.__setattr__(self, "mode", NspMode(self.mode))
        if not 0.0 <= self.weight <= 1.0:
            raise ArgumentError(f"Weight must lie in [0, 1], got {self.weight}")
        if self.mode is NspMode.NONUNIFORM:
            if self.fixed_T is None or self.fixed_T_tilde is None:
                raise ArgumentError("Nonuniform mode needs both T and the support estimate")
            object.__setattr__(self, "fixed_T", as_index_set(self.fixed_T, name="T"))
            object.__setattr__(self, "fixed_T_tilde", as_index_set(self.fixed_T_tilde, name="T~"))
            object.__setattr__(self, "k", int(self.fixed_T.size))
            object.__setattr__(self, "s", int(self.error_set.size))
            return
        if self.k < 0 or self.s < 0:
            raise ArgumentError(f"k and s must be non-negative, got k={self.k}, s={self.s}")
        if self.mode is NspMode.UNIFORM_STAR and self.s > self.k:
            raise ArgumentError(f"uniform_star needs s <= k, got s={self.s}, k={self.k}")

    @property
    def error_set(self) -> np.ndarray:
        """S = (T~ and T^c) or (T~^c and T) for a nonuniform query."""
        return symmetric_difference(self.fixed_T, self.fixed_T_tilde)

    def check_length(self, n: int):
        if self.mode is NspMode.NONUNIFORM:
            as_index_set(self.fixed_T, n, name="T")
            as_index_set(self.fixed_T_tilde, n, name="T~")
        elif self.k > n or self.s > n:
            raise ArgumentError(f"k={self.k}, s={self.s} exceed the signal length {n}")


def nsp_ratio(h, t, s, weight: float) -> float:
    """(w ||h_T||_1 + (1-w) ||h_S||_1) / ||h_{T^c}||_1, with x/0 = inf for x > 0 and 0/0 = 0."""
    abs_h = np.abs(np.asarray(h, dtype=np.float64))
    t = np.asarray(t, dtype=np.int64)
    s = np.asarray(s, dtype=np.int64)
    scale = abs_h.max(initial=0.0)
    if scale == 0.0:
        return 0.0
    outside = np.ones(abs_h.shape[0], dtype=bool)
    outside[t] = False
    numerator = weight * abs_h[t].sum() + (1.0 - weight) * abs_h[s].sum()
    denominator = abs_h[outside].sum()
    if denominator <= ZERO_TOL * scale:
        return float("inf") if numerator > ZERO_TOL * scale else 0.0
    return float(numerator / denominator)


def normalize_witness(h) -> np.ndarray:
    """Scale to unit max norm, clear structural zeros, make the first nonzero positive."""
    h = np.asarray(h, dtype=np.float64)
    scale = np.abs(h).max(initial=0.0)
    if scale == 0.0:
        return h.copy()
    h = h / scale
    h[np.abs(h) <= ZERO_TOL] = 0.0
    first = np.flatnonzero(h)[0]
    return -h if h[first] < 0 else h


@dataclass(frozen=True)
class NspCertificate:
    """Optimal constant C* with a null-space vector and index sets attaining it."""
    mode: NspMode
    k: int
    s: int
    weight: float
    optimal_constant: float
    witness: np.ndarray
    witness_T: np.ndarray
    witness_S: np.ndarray

    @property
    def satisfied(self) -> bool:
        return self.optimal_constant < 1.0

    def ratio(self) -> float:
        return nsp_ratio(self.witness, self.witness_T, self.witness_S, self.weight)

    def summary(self) -> str:
        return (f"{self.mode.value} k={self.k} s={self.s} w={self.weight:g}: "
                f"C*={self.optimal_constant:.10g}")
