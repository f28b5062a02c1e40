#!/usr/bin/env python3
"""
Tests for seeded generators, support estimates and null-space bases
"""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from errors import ArgumentError, DegeneracyError, SizingError
from sensing import (Rng, derive_seed, gen_gaussian_matrix, gen_sparse_signal,
                     gen_support_estimate, null_space_basis, support_error_size)
from sensing.types import ProblemInstance, as_dense_matrix


def test_gaussian_matrix_is_deterministic():
    first = gen_gaussian_matrix(2, 2, Rng(7))
    second = gen_gaussian_matrix(2, 2, Rng(7))
    assert first.tobytes() == second.tobytes()


def test_gaussian_matrix_moments():
    a = gen_gaussian_matrix(200, 500, Rng(3))
    assert abs(a.mean()) <= 4 / np.sqrt(200 * 500)
    assert abs(a.var() - 1.0) <= 0.05


def test_gaussian_submatrix_full_rank():
    a = gen_gaussian_matrix(50, 500, Rng(1))
    assert np.linalg.matrix_rank(a[:, :50]) == 50


def test_gaussian_matrix_rejects_bad_sizes():
    with pytest.raises(SizingError):
        gen_gaussian_matrix(0, 5, Rng(1))
    with pytest.raises(SizingError):
        gen_gaussian_matrix(20_000, 20_000, Rng(1))


def test_child_seeds_differ_by_index():
    assert derive_seed(5, 1, 2) != derive_seed(5, 2, 1)
    assert derive_seed(5, 1, 2) == derive_seed(5, 1, 2)
    assert Rng(9).child(3).seed == derive_seed(9, 3)


def test_sparse_signal_edge_cases():
    empty = gen_sparse_signal(10, 0, Rng(5))
    assert not empty.signal.any() and empty.support.size == 0

    sparse = gen_sparse_signal(500, 25, Rng(9))
    assert np.count_nonzero(sparse.signal) == 25
    assert np.all(np.isfinite(sparse.signal))
    assert np.array_equal(np.flatnonzero(sparse.signal), sparse.support)

    dense = gen_sparse_signal(20, 20, Rng(2))
    assert np.count_nonzero(dense.signal) == 20

    with pytest.raises(ArgumentError):
        gen_sparse_signal(5, 6, Rng(1))


def test_measurements_match_naive_product():
    for case in range(100):
        rng = Rng(derive_seed(11, case))
        m, n = 1 + case % 7, 2 + case % 13
        a = gen_gaussian_matrix(m, n, rng)
        instance = gen_sparse_signal(n, 1 + case % n, rng).measure(a)
        naive = np.array([sum(a[i, j] * instance.signal[j] for j in range(n)) for i in range(m)])
        assert_allclose(instance.measurements, naive, rtol=1e-12, atol=1e-12, err_msg=str(case))


@pytest.mark.parametrize("alpha, inside, error_size", [(1.0, 10, 0), (0.3, 3, 14), (0.0, 0, 20)])
def test_support_estimate_cardinalities(alpha, inside, error_size):
    instance = gen_sparse_signal(50, 10, Rng(4))
    estimate = gen_support_estimate(instance, alpha, 1.0, 0.5, Rng(8))
    assert estimate.size == 10
    assert np.intersect1d(estimate.estimate, instance.support).size == inside
    assert estimate.error_size(instance.support) == error_size
    assert error_size == round(support_error_size(10, alpha, 1.0))
    assert estimate.weight == 0.5
    if alpha == 1.0:
        assert np.array_equal(estimate.estimate, instance.support)


def test_support_estimate_is_deterministic():
    instance = gen_sparse_signal(40, 8, Rng(4))
    first = gen_support_estimate(instance, 0.7, 1.5, 0.3, Rng(21))
    second = gen_support_estimate(instance, 0.7, 1.5, 0.3, Rng(21))
    assert np.array_equal(first.estimate, second.estimate)
    assert first.size == 12
    assert np.intersect1d(first.estimate, instance.support).size == 8


def test_support_estimate_rejects_infeasible_cardinalities():
    instance = gen_sparse_signal(12, 10, Rng(4))
    with pytest.raises(ArgumentError):
        gen_support_estimate(instance, 0.0, 1.0, 0.5, Rng(1))
    with pytest.raises(ArgumentError):
        gen_support_estimate(instance, 0.5, 1.0, 1.5, Rng(1))


def test_null_space_of_coordinate_projection():
    basis = null_space_basis([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    assert basis.shape == (3, 1)
    assert_allclose(np.abs(basis[:, 0]), [0.0, 0.0, 1.0], atol=1e-15)


def test_null_space_of_row_vector():
    basis = null_space_basis([[1.0, 1.0]])
    assert_allclose(np.abs(basis[:, 0]), [1 / np.sqrt(2)] * 2, atol=1e-15)
    assert basis[0, 0] == pytest.approx(-basis[1, 0])


def test_null_space_of_gaussian_matrix():
    a = gen_gaussian_matrix(4, 7, Rng(12))
    basis = null_space_basis(a)
    assert basis.shape == (7, 3)
    assert_allclose(basis.T @ basis, np.eye(3), atol=1e-12)
    assert np.abs(a @ basis).max() <= 1e-10


def test_null_space_errors():
    with pytest.raises(DegeneracyError):
        null_space_basis([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]])
    with pytest.raises(ArgumentError):
        null_space_basis(np.eye(3))


def test_dense_matrix_validation():
    with pytest.raises(ArgumentError):
        as_dense_matrix([1.0, 2.0])
    with pytest.raises(ArgumentError):
        as_dense_matrix([[1.0, np.nan]])


def test_problem_instance_rejects_mismatched_matrix():
    instance = ProblemInstance(np.zeros(4), np.array([], dtype=np.int64), seed=1)
    with pytest.raises(ArgumentError):
        instance.measure(np.ones((2, 5)))
