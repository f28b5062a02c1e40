"""
NSP constants by per-orthant linear programming.

For a sign pattern sigma the substitution h = sigma * g with g >= 0 makes the
ratio linear-fractional; normalizing the denominator to 1 gives the LP

    maximize sum_i a_i g_i  subject to  A diag(sigma) g = 0,
                                        sum_{i in T^c} g_i = 1,  g >= 0

with a_i = w [i in T] + (1-w) [i in S]. An unbounded LP, or a nonzero point
of the orthant with a vanishing denominator, means C* is infinite. This is
slow (2^(N-1) LPs per set pair) and serves as the independent oracle for the
circuit method.
"""

import logging
from itertools import combinations, product
from math import comb
from typing import Iterable, Optional, Tuple

import numpy as np

from errors import CapacityError
from nsp_verifier.model import NspSettings, normalize_witness
from simplex import LpStatus, StandardLp, solve_lp

logger = logging.getLogger(__name__)


def sign_patterns(n: int):
    """All sign vectors with the first entry +1, in lexicographic order (+ before -)."""
    for tail in product((1.0, -1.0), repeat=n - 1):
        yield np.array((1.0,) + tail)


def _zero_denominator_point(a, sigma, outside, coefficients, settings) -> Optional[np.ndarray]:
    """A point g of the orthant with g_{T^c} = 0 and positive numerator, if any."""
    m, n = a.shape
    eq_matrix = np.vstack([a * sigma, coefficients[None, :]])
    eq_rhs = np.concatenate([np.zeros(m), [1.0]])
    solution = solve_lp(StandardLp(outside.astype(np.float64), eq_matrix, eq_rhs),
                        settings=settings.solver)
    if solution.is_optimal and solution.objective_value <= settings.solver.feas_tol:
        return solution.point
    return None


def pair_supremum(a: np.ndarray, t, s, weight: float,
                  settings: NspSettings) -> Tuple[float, Optional[np.ndarray]]:
    """Supremum of the ratio over the null space for fixed (T, S), with a maximizing h."""
    m, n = a.shape
    coefficients = np.zeros(n)
    coefficients[list(t)] += weight
    coefficients[list(s)] += 1.0 - weight
    outside = np.ones(n, dtype=bool)
    outside[list(t)] = False

    best_value, best_h = None, None
    for sigma in sign_patterns(n):
        eq_matrix = np.vstack([a * sigma, outside.astype(np.float64)[None, :]])
        eq_rhs = np.concatenate([np.zeros(m), [1.0]])
        solution = solve_lp(StandardLp(-coefficients, eq_matrix, eq_rhs), settings=settings.solver)
        if solution.status is LpStatus.UNBOUNDED:
            return float("inf"), sigma * solution.ray
        if solution.status is LpStatus.INFEASIBLE:
            point = _zero_denominator_point(a, sigma, outside, coefficients, settings)
            if point is not None:
                return float("inf"), sigma * point
            continue
        value = -solution.objective_value
        if best_value is None or value > best_value:
            best_value, best_h = value, sigma * solution.point
    return (0.0 if best_value is None else best_value), best_h


def set_pairs(n: int, k: int, s: int, nested: bool) -> Iterable[Tuple[tuple, tuple]]:
    """(T, S) pairs with |T| = k, |S| = s; S ranges over subsets of T when ``nested``."""
    for t in combinations(range(n), k):
        pool = t if nested else range(n)
        for s_set in combinations(pool, s):
            yield t, s_set


def count_pairs(n: int, k: int, s: int, nested: bool) -> int:
    return comb(n, k) * (comb(k, s) if nested else comb(n, s))


def orthant_maximum(a: np.ndarray, pairs, pair_count: int, weight: float, settings: NspSettings):
    """Max over set pairs of the per-pair supremum; returns (C*, h, T, S)."""
    n = a.shape[1]
    lp_count = pair_count * 2 ** (n - 1)
    if lp_count > settings.lp_budget:
        raise CapacityError(f"{lp_count} orthant LPs exceed the budget of {settings.lp_budget}")
    logger.debug(f"Solving up to {lp_count} orthant LPs over {pair_count} set pair(s)")

    best = None
    for t, s_set in pairs:
        value, h = pair_supremum(a, t, s_set, weight, settings)
        if best is None or value > best[0]:
            best = (value, h, t, s_set)
        if value == float("inf"):
            break
    value, h, t, s_set = best
    if h is None:
        # no orthant admits a nonzero h with a positive denominator
        h = np.zeros(n)
    return value, normalize_witness(h), np.array(t, dtype=np.int64), np.array(s_set, dtype=np.int64)
