#!/usr/bin/env python3
"""
Tests for weighted l1 recovery, exactness checks and uniqueness testing
"""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from errors import (ArgumentError, DegenerateRecoveryError,
                    RecoveryInfeasibleError)
from nsp_verifier import nsp_constant_nonuniform
from recovery import (RecoverySettings, WeightVector, check_exact,
                      is_unique_minimizer, solve_l1, solve_weighted_l1)
from sensing import (Rng, SupportEstimate, derive_seed, gen_gaussian_matrix,
                     gen_sparse_signal, gen_support_estimate)


def draw(m, n, k, seed):
    rng = Rng(seed)
    a = gen_gaussian_matrix(m, n, rng)
    return a, gen_sparse_signal(n, k, rng).measure(a)


def test_weight_vector_from_estimate():
    weights = WeightVector.from_estimate(SupportEstimate(np.array([1, 3]), 0.25), 5)
    assert_allclose(weights.weights, [1.0, 0.25, 1.0, 0.25, 1.0])
    assert weights.norm([1.0, -2.0, 0.0, 4.0, 0.0]) == pytest.approx(1.0 + 0.5 + 1.0)
    with pytest.raises(ArgumentError):
        WeightVector(np.array([0.5, 1.5]))


def test_l1_recovers_very_sparse_signal():
    a, instance = draw(20, 40, 3, seed=31)
    result = solve_l1(a, instance.measurements, truth=instance.signal)
    assert result.exact
    assert result.relative_error <= 1e-8
    assert result.weighted_norm == pytest.approx(np.abs(instance.signal).sum(), rel=1e-9)
    assert np.abs(a @ result.recovered - instance.measurements).max() <= 1e-9 * (1 + np.abs(instance.measurements).max())


def test_zero_weight_on_true_support_recovers():
    a, instance = draw(20, 40, 8, seed=32)
    estimate = gen_support_estimate(instance, 1.0, 1.0, 0.0, Rng(5))
    weights = WeightVector.from_estimate(estimate, 40)
    result = solve_weighted_l1(a, instance.measurements, weights, truth=instance.signal)
    assert result.exact
    assert result.weighted_norm == pytest.approx(0.0, abs=1e-9)


def test_relative_error_is_nan_without_truth():
    a, instance = draw(10, 20, 2, seed=33)
    result = solve_l1(a, instance.measurements)
    assert math.isnan(result.relative_error)
    assert not result.exact
    assert not result.has_truth


def test_weights_of_one_match_plain_l1():
    a, instance = draw(12, 30, 4, seed=34)
    plain = solve_l1(a, instance.measurements, truth=instance.signal)
    weighted = solve_weighted_l1(a, instance.measurements, WeightVector.uniform(30), truth=instance.signal)
    assert np.array_equal(plain.recovered, weighted.recovered)
    assert plain.exact == weighted.exact


def test_measurements_outside_range_are_infeasible():
    a = np.array([[1.0, 1.0], [1.0, 1.0]])
    with pytest.raises(RecoveryInfeasibleError):
        solve_l1(a, [1.0, 2.0])


def test_zero_weight_kernel_is_degenerate():
    a = np.array([[1.0, 2.0, 3.0]])
    with pytest.raises(DegenerateRecoveryError):
        solve_weighted_l1(a, [1.0], WeightVector(np.array([0.0, 0.0, 1.0])))


def test_length_mismatches_are_rejected():
    a = np.ones((2, 4))
    with pytest.raises(ArgumentError):
        solve_l1(a, [1.0, 2.0, 3.0])
    with pytest.raises(ArgumentError):
        solve_weighted_l1(a, [1.0, 1.0], WeightVector.uniform(3))


def test_check_exact():
    truth = np.array([1.0, 0.0, -2.0])
    assert check_exact(truth, truth)
    assert check_exact(truth + 1e-6, truth)
    assert not check_exact(truth + 1e-2, truth)
    assert check_exact(np.zeros(3), np.zeros(3))
    assert not check_exact(np.array([1e-3, 0.0, 0.0]), np.zeros(3))
    with pytest.raises(ArgumentError):
        check_exact(np.zeros(2), np.zeros(3))


def test_unique_minimizer_on_single_row():
    a = np.array([[1.0, 2.0]])
    weights = WeightVector.uniform(2)
    assert is_unique_minimizer(a, [2.0], weights, [0.0, 1.0])
    assert not is_unique_minimizer(a, [2.0], weights, [2.0, 0.0])


def test_face_scan_agrees_with_dual_certificate():
    a = np.array([[1.0, 2.0]])
    weights = WeightVector.uniform(2)
    face_only = RecoverySettings(certificate_tol=10.0)
    assert is_unique_minimizer(a, [2.0], weights, [0.0, 1.0], settings=face_only)


def test_tied_minimizers_are_not_unique():
    a = np.array([[1.0, 1.0]])
    weights = WeightVector.uniform(2)
    assert not is_unique_minimizer(a, [1.0], weights, [1.0, 0.0])
    assert not is_unique_minimizer(a, [1.0], weights, [0.5, 0.5])
    face_only = RecoverySettings(certificate_tol=10.0)
    assert not is_unique_minimizer(a, [1.0], weights, [1.0, 0.0], settings=face_only)


def test_unique_minimizer_after_recovery():
    a, instance = draw(20, 40, 3, seed=31)
    weights = WeightVector.uniform(40)
    assert is_unique_minimizer(a, instance.measurements, weights, instance.signal)


def test_zero_weight_kernel_is_not_unique():
    a = np.array([[1.0, 2.0, 3.0]])
    weights = WeightVector(np.array([0.0, 0.0, 1.0]))
    assert not is_unique_minimizer(a, [1.0], weights, [1.0, 0.0, 0.0])


def test_infeasible_candidate_is_rejected():
    a = np.array([[1.0, 2.0]])
    with pytest.raises(ArgumentError):
        is_unique_minimizer(a, [2.0], WeightVector.uniform(2), [1.0, 1.0])


def test_estimate_outside_signal_is_rejected():
    with pytest.raises(ArgumentError):
        WeightVector.from_estimate(SupportEstimate(np.array([1, 5]), 0.5), 3)


def test_identity_returns_measurements():
    y = np.array([1.0, 0.0, -2.0])
    result = solve_l1(np.eye(3), y, truth=y)
    assert_allclose(result.recovered, y, atol=1e-12)
    assert result.exact
    assert result.weighted_norm == pytest.approx(3.0)


def test_single_row_of_ones_has_tied_minimizers():
    a = np.array([[1.0, 1.0, 1.0]])
    result = solve_l1(a, [2.0])
    assert result.weighted_norm == pytest.approx(2.0, abs=1e-12)
    assert np.abs(a @ result.recovered - 2.0).max() <= 1e-12
    assert not is_unique_minimizer(a, [2.0], WeightVector.uniform(3), result.recovered)


def test_gaussian_instance_well_inside_success_region():
    a, instance = draw(80, 100, 10, seed=2024)
    result = solve_l1(a, instance.measurements, truth=instance.signal)
    assert result.exact
    assert result.relative_error <= 1e-9


@pytest.mark.parametrize("k", [3, 8, 14])
def test_recovery_outcome_is_scale_invariant(k):
    for seed in range(40, 45):
        a, instance = draw(20, 40, k, seed)
        unit = solve_l1(a, instance.measurements, truth=instance.signal)
        scaled = solve_l1(a, 1e3 * instance.measurements, truth=1e3 * instance.signal)
        assert unit.exact == scaled.exact, (k, seed)


def test_unit_weights_reduce_to_plain_l1_on_many_instances():
    for case in range(100):
        rng = Rng(derive_seed(500, case))
        k = 1 + case % 6
        a = gen_gaussian_matrix(8, 16, rng)
        instance = gen_sparse_signal(16, k, rng).measure(a)
        estimate = gen_support_estimate(instance, 1.0, 1.0, 1.0, rng.child(1))
        weighted = solve_weighted_l1(a, instance.measurements, WeightVector.from_estimate(estimate, 16))
        plain = solve_l1(a, instance.measurements)
        assert abs(weighted.weighted_norm - plain.weighted_norm) <= 1e-12 * (1.0 + plain.weighted_norm), case


def test_nonuniform_constant_below_one_gives_unique_recovery():
    checked = 0
    for seed in range(20):
        rng = Rng(derive_seed(600, seed))
        a = gen_gaussian_matrix(6, 10, rng)
        t = np.sort(rng.choice(np.arange(10), 2))
        if nsp_constant_nonuniform(a, t, t, 0.5).optimal_constant >= 1.0 - 1e-6:
            continue
        x = np.zeros(10)
        x[t] = rng.standard_normal(2)
        weights = WeightVector.from_estimate(SupportEstimate(t, 0.5), 10)
        assert solve_weighted_l1(a, a @ x, weights, truth=x).exact, seed
        assert is_unique_minimizer(a, a @ x, weights, x), seed
        checked += 1
    assert checked >= 5


def test_uniqueness_tolerance_is_absolute():
    a, y = np.eye(2), [1e4, 0.0]
    weights = WeightVector.uniform(2)
    assert is_unique_minimizer(a, y, weights, [1e4, 0.0])
    # feasible within the LP tolerance, but 5e-6 away from the only minimizer
    assert not is_unique_minimizer(a, y, weights, [1e4 + 5e-6, 0.0])
