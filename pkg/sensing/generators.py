"""
Seeded generators for measurement matrices, sparse signals and support estimates.

All functions are pure in (dimensions, parameters, rng seed): the same inputs
always give bit-identical outputs.
"""

import logging

import numpy as np

from errors import ArgumentError
from sensing.rng import Rng
from sensing.types import (ProblemInstance, SupportEstimate, check_dimensions,
                           round_half_up)

logger = logging.getLogger(__name__)


def gen_gaussian_matrix(m: int, n: int, rng: Rng) -> np.ndarray:
    """m x n matrix with i.i.d. standard normal entries."""
    check_dimensions(m, n)
    return np.ascontiguousarray(rng.standard_normal((m, n)))


def gen_sparse_signal(n: int, k: int, rng: Rng) -> ProblemInstance:
    """
    k-sparse signal of length n.

    The support is uniform without replacement; nonzeros are i.i.d. standard
    normal. Measurements are attached later with ``ProblemInstance.measure``.
    """
    check_dimensions(1, n)
    if k < 0 or k > n:
        raise ArgumentError(f"Sparsity k={k} must lie in [0, {n}]")
    support = np.sort(rng.choice(np.arange(n), k))
    signal = np.zeros(n)
    signal[support] = rng.standard_normal(k)
    return ProblemInstance(signal=signal, support=support, seed=rng.seed)


def estimate_cardinalities(k: int, alpha: float, rho: float):
    """(|T~|, |T~ and T|) = (round(rho*k), round(alpha*rho*k)), ties rounded up."""
    if not 0.0 <= alpha <= 1.0:
        raise ArgumentError(f"Accuracy alpha={alpha} must lie in [0, 1]")
    if rho <= 0:
        raise ArgumentError(f"Size ratio rho={rho} must be positive")
    size = round_half_up(rho * k)
    inside = min(round_half_up(alpha * rho * k), size)
    return size, inside


def gen_support_estimate(instance: ProblemInstance, alpha: float, rho: float,
                         weight: float, rng: Rng) -> SupportEstimate:
    """
    Support estimate with accuracy alpha and size rho*k.

    round(alpha*rho*k) members are drawn uniformly from the true support and
    the rest uniformly from its complement.
    """
    if not 0.0 <= weight <= 1.0:
        raise ArgumentError(f"Weight w={weight} must lie in [0, 1]")
    n, k = instance.n, instance.k
    size, inside = estimate_cardinalities(k, alpha, rho)
    outside = size - inside
    if inside > k:
        raise ArgumentError(f"Estimate needs {inside} support members but k={k}")
    if outside > n - k:
        raise ArgumentError(f"Estimate needs {outside} off-support members but only {n - k} exist")

    off_support = np.setdiff1d(np.arange(n), instance.support)
    chosen_in = rng.choice(instance.support, inside)
    chosen_out = rng.choice(off_support, outside)
    estimate = np.sort(np.concatenate([chosen_in, chosen_out]))
    logger.debug(f"Support estimate: |T~|={size}, |T~ and T|={inside}, w={weight}")
    return SupportEstimate(estimate=estimate, weight=float(weight))
