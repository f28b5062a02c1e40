"""
Exact NSP constants by circuit enumeration.

Within one sign orthant of the null space the NSP ratio is a linear-fractional
function of h, so its supremum over the orthant cone is attained on an extreme
ray (or is infinite along a ray where the denominator vanishes). The extreme
rays of all orthant cones together are the circuits of the null space: the
null vectors whose zero set has rank d - 1 in the null-space basis, where
d = N - m. Every circuit is the kernel of some (d-1)-row block of the basis,
so enumerating those blocks in combination order and maximizing the ratio
over the resulting vectors gives C* exactly.
"""

import logging
from itertools import combinations

import numpy as np

from nsp_verifier.model import ZERO_TOL

logger = logging.getLogger(__name__)

RANK_TOL = 1e-9


def enumerate_circuits(basis: np.ndarray) -> np.ndarray:
    """
    Circuits of the subspace spanned by the columns of ``basis`` (N x d).

    Rows of the result are normalized to unit max norm with the first nonzero
    entry positive. Duplicates are kept; order follows the lexicographic order
    of the (d-1)-subsets that produced them.
    """
    n, d = basis.shape
    if d == 1:
        vectors = basis[:, 0][None, :]
    else:
        subsets = np.array(list(combinations(range(n), d - 1)), dtype=np.int64)
        blocks = basis[subsets]
        _, singular, vt = np.linalg.svd(blocks)
        full_rank = singular[:, -1] > RANK_TOL * singular[:, 0]
        vectors = vt[full_rank, -1, :] @ basis.T
        logger.debug(f"{int(full_rank.sum())} of {subsets.shape[0]} zero sets have full rank")

    scale = np.abs(vectors).max(axis=1, keepdims=True)
    vectors = vectors / scale
    vectors[np.abs(vectors) <= ZERO_TOL] = 0.0
    first = np.argmax(vectors != 0.0, axis=1)
    signs = np.sign(vectors[np.arange(vectors.shape[0]), first])
    return vectors * signs[:, None]


def _ratios(numerator, denominator):
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = numerator / denominator
    zero = denominator <= ZERO_TOL
    return np.where(zero, np.where(numerator > ZERO_TOL, np.inf, 0.0), ratios)


def top_sets_ratios(circuits: np.ndarray, k: int, s: int, weight: float):
    """
    Ratios with T the k largest and S the s largest entries of each circuit.

    Returns (ratios, order) where ``order`` ranks coordinates per circuit by
    decreasing magnitude, ties broken by index.
    """
    abs_h = np.abs(circuits)
    order = np.argsort(-abs_h, axis=1, kind="stable")
    ranked = np.take_along_axis(abs_h, order, axis=1)
    numerator = weight * ranked[:, :k].sum(axis=1) + (1.0 - weight) * ranked[:, :s].sum(axis=1)
    denominator = ranked[:, k:].sum(axis=1)
    return _ratios(numerator, denominator), order


def fixed_sets_ratios(circuits: np.ndarray, t: np.ndarray, s: np.ndarray, weight: float) -> np.ndarray:
    abs_h = np.abs(circuits)
    outside = np.ones(circuits.shape[1], dtype=bool)
    outside[t] = False
    numerator = weight * abs_h[:, t].sum(axis=1) + (1.0 - weight) * abs_h[:, s].sum(axis=1)
    denominator = abs_h[:, outside].sum(axis=1)
    return _ratios(numerator, denominator)
