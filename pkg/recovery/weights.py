from dataclasses import dataclass

import numpy as np

from errors import ArgumentError
from sensing.types import SupportEstimate, as_index_set


@dataclass(frozen=True)
class WeightVector:
    """Per-coordinate weights in [0, 1] for the weighted l1 norm."""
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64).ravel()
        if w.size == 0:
            raise ArgumentError("Weight vector must not be empty")
        if np.any(~np.isfinite(w)) or np.any(w < 0.0) or np.any(w > 1.0):
            raise ArgumentError("Weights must lie in [0, 1]")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        return cls(np.ones(n))

    @classmethod
    def from_estimate(cls, estimate: SupportEstimate, n: int) -> "WeightVector":
        """w on the support estimate, 1 elsewhere."""
        weights = np.ones(n)
        weights[as_index_set(estimate.estimate, n, name="T~")] = estimate.weight
        return cls(weights)

    def norm(self, z) -> float:
        return float(self.weights @ np.abs(z))

    def zero_set(self) -> np.ndarray:
        return np.flatnonzero(self.weights == 0.0)
