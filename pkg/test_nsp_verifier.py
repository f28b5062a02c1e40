#!/usr/bin/env python3
"""
Tests for exact weighted null space property constants and their witnesses
"""

import numpy as np
import pytest

from errors import ArgumentError, CapacityError, DomainError
from nsp_verifier import (NspSettings, composed_constant, max_weight_for_recovery,
                          nsp_constant_nonuniform, nsp_constant_standard,
                          nsp_constant_uniform, nsp_constant_uniform_star,
                          nsp_ratio, standard_implies_weighted, witness_instance)
from recovery import WeightVector, is_unique_minimizer
from sensing import Rng, gen_gaussian_matrix

ORTHANT = NspSettings(method="orthant")
PAIR = np.array([[1.0, -1.0]])


def gaussian(m, n, seed):
    return gen_gaussian_matrix(m, n, Rng(seed))


def small_matrices(count=20):
    return [gaussian(5, 9, 400 + i) for i in range(count)]


def assert_witness_valid(certificate, a):
    h = certificate.witness
    assert np.abs(h).max() == pytest.approx(1.0)
    assert h[np.flatnonzero(h)[0]] > 0
    assert np.abs(a @ h).max() <= 1e-10 * np.abs(a).max() * a.shape[1]
    assert certificate.ratio() == pytest.approx(certificate.optimal_constant, rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("settings", [NspSettings(), ORTHANT], ids=["circuit", "orthant"])
def test_single_null_direction(settings):
    same = nsp_constant_nonuniform(PAIR, [0], [0], 0.5, settings=settings)
    assert same.optimal_constant == pytest.approx(0.5, abs=1e-12)
    assert same.witness_S.size == 0

    swapped = nsp_constant_nonuniform(PAIR, [0], [1], 0.5, settings=settings)
    assert swapped.optimal_constant == pytest.approx(1.5, abs=1e-12)
    assert list(swapped.witness_S) == [0, 1]
    assert swapped.witness == pytest.approx([1.0, 1.0])


def test_nsp_ratio_conventions():
    assert nsp_ratio([1.0, 1.0], [0], [], 0.5) == pytest.approx(0.5)
    assert nsp_ratio([1.0, 0.0], [0], [], 1.0) == float("inf")
    assert nsp_ratio([1.0, 0.0], [0], [], 0.0) == 0.0
    assert nsp_ratio([0.0, 0.0], [0], [1], 0.5) == 0.0


@pytest.mark.parametrize("mode", ["uniform", "uniform_star", "standard", "nonuniform"])
def test_circuits_match_orthant_enumeration(mode):
    a = gaussian(3, 6, 77)

    def constant(settings):
        if mode == "uniform":
            return nsp_constant_uniform(a, 2, 1, 0.4, settings=settings)
        if mode == "uniform_star":
            return nsp_constant_uniform_star(a, 2, 1, 0.4, settings=settings)
        if mode == "standard":
            return nsp_constant_standard(a, 2, settings=settings)
        return nsp_constant_nonuniform(a, [1, 4], [1, 2], 0.3, settings=settings)

    by_circuits = constant(NspSettings())
    by_orthants = constant(ORTHANT)
    assert np.isfinite(by_circuits.optimal_constant)
    assert by_orthants.optimal_constant == pytest.approx(by_circuits.optimal_constant, rel=1e-7)
    assert_witness_valid(by_circuits, a)
    assert_witness_valid(by_orthants, a)


def test_uniform_equals_uniform_star():
    for a in small_matrices():
        for w in (0.0, 0.4, 1.0):
            uniform = nsp_constant_uniform(a, 2, 1, w).optimal_constant
            star = nsp_constant_uniform_star(a, 2, 1, w).optimal_constant
            assert abs(uniform - star) <= 1e-9


def test_equal_orders_ignore_weight():
    for a in small_matrices():
        reference = nsp_constant_uniform(a, 2, 2, 1.0).optimal_constant
        for w in (0.0, 0.3, 0.7):
            assert abs(nsp_constant_uniform(a, 2, 2, w).optimal_constant - reference) <= 1e-9
        assert abs(nsp_constant_standard(a, 2).optimal_constant - reference) <= 1e-9


def test_empty_error_set_scales_standard_constant():
    for a in small_matrices(5):
        standard = nsp_constant_standard(a, 2).optimal_constant
        for w in (0.25, 0.6):
            assert nsp_constant_uniform(a, 2, 0, w).optimal_constant == pytest.approx(w * standard, rel=1e-12)


def test_constant_is_monotone_in_weight():
    weights = np.linspace(0.0, 1.0, 6)
    for a in small_matrices():
        values = [nsp_constant_uniform(a, 3, 1, w).optimal_constant for w in weights]
        assert all(values[i] <= values[i + 1] + 1e-9 for i in range(len(values) - 1))


def test_uniform_dominates_every_fixed_pair():
    for a in small_matrices(5):
        uniform = nsp_constant_uniform(a, 2, 2, 0.3).optimal_constant
        for t, t_tilde in (([0, 1], [0, 2]), ([3, 8], [3, 8]), ([2, 5], [5])):
            fixed = nsp_constant_nonuniform(a, t, t_tilde, 0.3).optimal_constant
            assert fixed <= uniform + 1e-9


def test_standard_constant_bounds_half_accurate_estimates():
    for a in small_matrices(5):
        standard = nsp_constant_standard(a, 2).optimal_constant
        for w in (0.0, 0.5, 1.0):
            fixed = nsp_constant_nonuniform(a, [0, 6], [0, 7], w).optimal_constant
            assert fixed <= standard + 1e-9


def test_composed_constant_bounds_uniform_constant():
    for a in small_matrices():
        c_s = nsp_constant_standard(a, 1).optimal_constant
        c_ks = nsp_constant_standard(a, 1).optimal_constant
        if c_s * c_ks >= 1.0:
            continue
        for w in (0.0, 0.5, 1.0):
            assert composed_constant(c_s, c_ks, w) >= nsp_constant_uniform(a, 2, 1, w).optimal_constant - 1e-9


def test_composed_constant_values():
    assert composed_constant(0.0, 0.7, 0.4) == pytest.approx(0.28)
    assert composed_constant(0.2, 0.5, 0.0) == pytest.approx(1 / 3)
    with pytest.raises(DomainError) as raised:
        composed_constant(2.0, 0.5, 0.5)
    assert raised.value.term == "c_s*c_ks"


def test_max_weight_for_recovery():
    assert max_weight_for_recovery(0.2, 1.0) == pytest.approx(1 / 3)
    assert max_weight_for_recovery(1e-12, 1.0) == pytest.approx(1.0)
    assert max_weight_for_recovery(0.5, 0.0) == 1.0
    for c_s, c_ks in ((0.2, 1.0), (0.1, 0.3), (0.05, 2.0)):
        w = max_weight_for_recovery(c_s, c_ks)
        assert 0.0 <= w <= 1.0
        assert composed_constant(c_s, c_ks, w) <= 1.0 + 1e-12
    with pytest.raises(DomainError):
        max_weight_for_recovery(0.4, 1.0)


def test_standard_implies_weighted():
    assert standard_implies_weighted(0.6, 3, 2) == 0.6
    with pytest.raises(DomainError):
        standard_implies_weighted(0.6, 2, 3)


def test_capacity_limits():
    with pytest.raises(CapacityError):
        nsp_constant_uniform(gaussian(3, 19, 1), 2, 1, 0.5)
    with pytest.raises(CapacityError):
        nsp_constant_uniform(gaussian(3, 6, 1), 2, 1, 0.5, settings=NspSettings(method="orthant", lp_budget=10))


def test_invalid_queries():
    a = gaussian(3, 6, 2)
    with pytest.raises(ArgumentError):
        nsp_constant_uniform_star(a, 1, 2, 0.5)
    with pytest.raises(ArgumentError):
        nsp_constant_uniform(a, 7, 1, 0.5)
    with pytest.raises(ArgumentError):
        nsp_constant_nonuniform(a, [0, 6], [0], 0.5)
    with pytest.raises(ArgumentError):
        nsp_constant_standard(np.eye(3), 1)


def test_witness_of_failed_property_is_not_unique():
    a = gaussian(2, 6, 9)
    certificate = nsp_constant_standard(a, 2)
    assert np.isfinite(certificate.optimal_constant)
    assert certificate.optimal_constant >= 2.0 - 1e-9
    assert_witness_valid(certificate, a)

    instance = witness_instance(certificate, a)
    assert np.abs(a @ instance.competitor - instance.measurements).max() <= 1e-10
    weights = WeightVector.from_estimate(instance.estimate, 6)
    assert weights.norm(instance.competitor) < weights.norm(instance.signal)
    assert not is_unique_minimizer(a, instance.measurements, weights, instance.signal)


def test_infinite_constant_when_circuits_fit_inside_support():
    a = gaussian(2, 6, 10)
    certificate = nsp_constant_uniform(a, 3, 1, 0.4)
    assert certificate.optimal_constant == float("inf")
    assert not certificate.satisfied
    instance = witness_instance(certificate, a)
    weights = WeightVector.from_estimate(instance.estimate, 6)
    assert not is_unique_minimizer(a, instance.measurements, weights, instance.signal)


def test_certificates_are_deterministic():
    a = gaussian(5, 9, 12)
    first = nsp_constant_uniform(a, 2, 1, 0.4)
    second = nsp_constant_uniform(a, 2, 1, 0.4)
    assert first.optimal_constant == second.optimal_constant
    assert np.array_equal(first.witness, second.witness)


@pytest.mark.slow
def test_orthant_oracle_on_larger_matrices():
    for a in small_matrices(3):
        by_circuits = nsp_constant_uniform(a, 2, 1, 0.4)
        by_orthants = nsp_constant_uniform(a, 2, 1, 0.4, settings=ORTHANT)
        assert by_orthants.optimal_constant == pytest.approx(by_circuits.optimal_constant, rel=1e-7)
