import logging

import numpy as np

from errors import CapacityError
from nsp_verifier import circuits, orthants
from nsp_verifier.model import (DEFAULT_NSP_SETTINGS, NspCertificate, NspMode,
                                NspQuery, NspSettings)
from sensing.nullspace import null_space_basis
from sensing.types import as_dense_matrix

logger = logging.getLogger(__name__)


def _prepare(a, query: NspQuery, settings: NspSettings):
    a = as_dense_matrix(a)
    n = a.shape[1]
    if n > settings.orthant_cap:
        raise CapacityError(f"N={n} exceeds orthant_cap={settings.orthant_cap}")
    query.check_length(n)
    return a, null_space_basis(a)


def _by_circuits(a, basis, query: NspQuery) -> NspCertificate:
    vectors = circuits.enumerate_circuits(basis)
    if query.mode is NspMode.NONUNIFORM:
        t, s = query.fixed_T, query.error_set
        ratios = circuits.fixed_sets_ratios(vectors, t, s, query.weight)
        best = int(np.argmax(ratios))
    else:
        ratios, order = circuits.top_sets_ratios(vectors, query.k, query.s, query.weight)
        best = int(np.argmax(ratios))
        t = np.sort(order[best, :query.k])
        s = np.sort(order[best, :query.s])
    logger.debug(f"{vectors.shape[0]} circuits scanned, best index {best}")
    return NspCertificate(mode=query.mode, k=query.k, s=query.s, weight=query.weight,
                          optimal_constant=float(ratios[best]), witness=vectors[best],
                          witness_T=t.astype(np.int64), witness_S=s.astype(np.int64))


def _by_orthants(a, query: NspQuery, settings: NspSettings) -> NspCertificate:
    n = a.shape[1]
    if query.mode is NspMode.NONUNIFORM:
        pairs = [(tuple(query.fixed_T), tuple(query.error_set))]
        pair_count = 1
    else:
        # S inside T loses nothing when s <= k
        nested = query.s <= query.k
        pairs = orthants.set_pairs(n, query.k, query.s, nested)
        pair_count = orthants.count_pairs(n, query.k, query.s, nested)
    value, h, t, s = orthants.orthant_maximum(a, pairs, pair_count, query.weight, settings)
    return NspCertificate(mode=query.mode, k=query.k, s=query.s, weight=query.weight,
                          optimal_constant=value, witness=h, witness_T=t, witness_S=s)


def nsp_constant(a, query: NspQuery, settings: NspSettings = DEFAULT_NSP_SETTINGS) -> NspCertificate:
    """
    Optimal constant C* of the null space property described by ``query``.

    Raises CapacityError when N exceeds ``orthant_cap`` or the orthant LP
    budget, ArgumentError when the null space is trivial and DegeneracyError
    for rank-deficient matrices.
    """
    a, basis = _prepare(a, query, settings)
    if settings.method == "orthant":
        certificate = _by_orthants(a, query, settings)
    else:
        certificate = _by_circuits(a, basis, query)
    logger.debug(f"NSP constant {certificate.summary()} ({settings.method})")
    return certificate


def nsp_constant_nonuniform(a, t, t_tilde, weight: float,
                            settings: NspSettings = DEFAULT_NSP_SETTINGS) -> NspCertificate:
    """Constant for a fixed support T and estimate T~, with S their symmetric difference."""
    query = NspQuery(NspMode.NONUNIFORM, weight, fixed_T=t, fixed_T_tilde=t_tilde)
    return nsp_constant(a, query, settings)


def nsp_constant_uniform(a, k: int, s: int, weight: float,
                         settings: NspSettings = DEFAULT_NSP_SETTINGS) -> NspCertificate:
    """Constant over every |T| <= k and every |S| <= s."""
    return nsp_constant(a, NspQuery(NspMode.UNIFORM, weight, k=k, s=s), settings)


def nsp_constant_uniform_star(a, k: int, s: int, weight: float,
                              settings: NspSettings = DEFAULT_NSP_SETTINGS) -> NspCertificate:
    """Constant over |T| = k and S a subset of T with |S| = s; requires s <= k."""
    return nsp_constant(a, NspQuery(NspMode.UNIFORM_STAR, weight, k=k, s=s), settings)


def nsp_constant_standard(a, k: int, settings: NspSettings = DEFAULT_NSP_SETTINGS) -> NspCertificate:
    """Classical NSP constant: sup of ||h_T||_1 / ||h_{T^c}||_1 over |T| <= k."""
    return nsp_constant(a, NspQuery(NspMode.STANDARD, 1.0, k=k, s=0), settings)
