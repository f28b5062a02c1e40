"""Orthonormal null-space bases via QR factorization of the transpose."""

import logging

import numpy as np
import scipy.linalg

from errors import ArgumentError, DegeneracyError
from sensing.types import as_dense_matrix

logger = logging.getLogger(__name__)

RANK_TOL = 1e-10


def null_space_basis(a, rank_tol: float = RANK_TOL) -> np.ndarray:
    """
    Return an n x (n-m) matrix B with orthonormal columns spanning ker(A).

    A must have full row rank m < n. The full QR factorization A^T = Q R is
    taken and the trailing n-m columns of Q are returned. A is declared rank
    deficient when the smallest |R_ii| falls below ``rank_tol`` times the
    largest.
    """
    a = as_dense_matrix(a)
    m, n = a.shape
    if m >= n:
        raise ArgumentError(f"Null space basis needs m < n, got {m}x{n}")

    q, r = scipy.linalg.qr(a.T, mode="full")
    diag = np.abs(np.diag(r))
    scale = diag.max()
    if scale == 0.0 or diag.min() < rank_tol * scale:
        raise DegeneracyError(
            f"Matrix is rank deficient: |R_ii| ratio {diag.min() / scale if scale else 0.0:.3e} "
            f"below {rank_tol:.0e}")

    basis = np.ascontiguousarray(q[:, m:])
    residual = np.abs(a @ basis).max() if basis.size else 0.0
    logger.debug(f"Null space of {m}x{n} matrix: dim={n - m}, residual={residual:.2e}")
    return basis
