"""Core data types: dense matrices, problem instances and support estimates."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from errors import ArgumentError, SizingError

MAX_ENTRIES = 10 ** 8


def as_dense_matrix(values, name="matrix") -> np.ndarray:
    """
    Validate and return a row-major float64 matrix.

    DenseMatrix throughout the toolkit is a 2-D C-contiguous float64 ndarray
    with positive dimensions and finite entries.
    """
    arr = np.ascontiguousarray(np.asarray(values, dtype=np.float64))
    if arr.ndim != 2:
        raise ArgumentError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    rows, cols = arr.shape
    if rows < 1 or cols < 1:
        raise SizingError(f"{name} must have positive dimensions, got {rows}x{cols}")
    if not np.all(np.isfinite(arr)):
        raise ArgumentError(f"{name} contains non-finite entries")
    return arr


def check_dimensions(m: int, n: int):
    if m < 1 or n < 1:
        raise SizingError(f"Dimensions must be positive, got {m}x{n}")
    if m * n > MAX_ENTRIES:
        raise SizingError(f"{m}x{n} exceeds the {MAX_ENTRIES} entry limit")


def as_index_set(indices, n: Optional[int] = None, name="index set") -> np.ndarray:
    """Sorted, duplicate-free int64 index array, optionally bounded by ``n``."""
    arr = np.asarray(sorted({int(i) for i in np.asarray(indices, dtype=np.int64).ravel()}),
                     dtype=np.int64)
    if arr.size and arr[0] < 0:
        raise ArgumentError(f"{name} has negative index {arr[0]}")
    if n is not None and arr.size and arr[-1] >= n:
        raise ArgumentError(f"{name} index {arr[-1]} out of range for length {n}")
    return arr


def symmetric_difference(first, second) -> np.ndarray:
    return np.setxor1d(np.asarray(first, dtype=np.int64), np.asarray(second, dtype=np.int64))


def round_half_up(value: float) -> int:
    # Nudge by a few ulps so products like 0.3*10 land on the intended integer
    return int(math.floor(value + 0.5 + 1e-9))


def support_error_size(k: int, alpha: float, rho: float) -> float:
    """Size s = (1 + rho - 2*alpha*rho) * k of the support estimate error."""
    return (1.0 + rho - 2.0 * alpha * rho) * k


@dataclass(frozen=True)
class ProblemInstance:
    signal: np.ndarray
    support: np.ndarray
    seed: int
    measurements: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return self.signal.shape[0]

    @property
    def k(self) -> int:
        return self.support.shape[0]

    def measure(self, a: np.ndarray) -> "ProblemInstance":
        """Return a copy carrying y = A x."""
        if a.shape[1] != self.n:
            raise ArgumentError(f"Matrix has {a.shape[1]} columns, signal has length {self.n}")
        return ProblemInstance(self.signal, self.support, self.seed, a @ self.signal)


@dataclass(frozen=True)
class SupportEstimate:
    estimate: np.ndarray
    weight: float

    @property
    def size(self) -> int:
        return self.estimate.shape[0]

    def accuracy(self, support) -> float:
        """alpha = |T~ and T| / |T~|; NaN for an empty estimate."""
        if self.size == 0:
            return float("nan")
        return np.intersect1d(self.estimate, support).shape[0] / self.size

    def size_ratio(self, k: int) -> float:
        return self.size / k if k else float("nan")

    def error_set(self, support) -> np.ndarray:
        return symmetric_difference(self.estimate, support)

    def error_size(self, support) -> int:
        return int(self.error_set(support).shape[0])
