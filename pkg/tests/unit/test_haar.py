"""Tests for Haar sampling and averaging."""

import numpy as np
import pytest

from orbitkit.config import settings
from orbitkit.errors import DimensionMismatchError, NoSamplerAvailableError, UsageError
from orbitkit.models import ScalarProduct
from orbitkit.services.catalog import catalog_load
from orbitkit.services.haar import IdentitySampler, RotationSampler, UnitarySampler, sampler_for
from orbitkit.services.lie import bracket, killing_form
from orbitkit.services.products import HaarAveragingService, diagonal_product, haar_average


@pytest.mark.parametrize("name", ["su2", "so3", "su3"])
def test_samples_are_rotations(name, rng):
    alg = catalog_load(name)
    samples = sampler_for(alg).sample(16, rng)
    assert samples.shape == (16, alg.dim, alg.dim)
    for A in samples:
        np.testing.assert_allclose(A.T @ A, np.eye(alg.dim), atol=1e-12)
        assert np.linalg.det(A) == pytest.approx(1.0)


@pytest.mark.parametrize("name", ["su2", "so3", "su3"])
def test_samples_are_automorphisms(name, rng):
    alg = catalog_load(name)
    for A in sampler_for(alg).sample(4, rng):
        x, y = rng.standard_normal((2, alg.dim))
        np.testing.assert_allclose(A @ bracket(alg, x, y), bracket(alg, A @ x, A @ y), atol=1e-12)


def test_sampler_kinds(su2, so3, su3):
    assert isinstance(sampler_for(su2), UnitarySampler)
    assert isinstance(sampler_for(so3), RotationSampler)
    assert sampler_for(su3).dim == 8


@pytest.mark.parametrize("name", ["sl2r", "heisenberg3", "abelian(3)"])
def test_no_sampler_for_noncompact_algebras(name):
    with pytest.raises(NoSamplerAvailableError):
        sampler_for(catalog_load(name))


def test_single_identity_sample_returns_input(su2):
    P0 = diagonal_product([1.0, 2.0, 3.0])
    averaged = haar_average(su2, P0, IdentitySampler(3), 1, seed=0)
    np.testing.assert_array_equal(averaged.gram, P0.gram)
    assert averaged.label == "haar(diag)"


def test_invariant_input_is_a_fixed_point(su3):
    K = killing_form(su3)
    averaged = haar_average(su3, K, sampler_for(su3), 500, seed=3)
    np.testing.assert_allclose(averaged.gram, K.gram, atol=1e-12)


def test_averaging_is_seed_deterministic(su2):
    P0 = diagonal_product([1.0, 2.0, 3.0])
    first = haar_average(su2, P0, sampler_for(su2), 3000, seed=11, chunk_size=700)
    second = haar_average(su2, P0, sampler_for(su2), 3000, seed=11, chunk_size=700)
    np.testing.assert_array_equal(first.gram, second.gram)


def test_worker_count_does_not_change_the_result(su3):
    P0 = diagonal_product([float(k) for k in range(1, 9)])
    sampler = sampler_for(su3)
    serial = haar_average(su3, P0, sampler, 2500, seed=5, chunk_size=400, workers=1)
    threaded = haar_average(su3, P0, sampler, 2500, seed=5, chunk_size=400, workers=3)
    assert serial.gram.tobytes() == threaded.gram.tobytes()


def test_service_defaults_come_from_settings():
    service = HaarAveragingService()
    assert service.chunk_size == settings.haar_chunk_size
    assert service.workers == settings.haar_workers


def test_service_splits_samples_into_chunks():
    assert HaarAveragingService(chunk_size=400).chunk_counts(1000) == [400, 400, 200]
    assert HaarAveragingService(chunk_size=500).chunk_counts(1000) == [500, 500]


@pytest.mark.parametrize("chunk_size,workers", [(0, 1), (10, 0)])
def test_service_rejects_bad_configuration(chunk_size, workers):
    with pytest.raises(UsageError):
        HaarAveragingService(chunk_size=chunk_size, workers=workers)


def test_service_matches_the_function(su2):
    P0 = diagonal_product([1.0, 2.0, 3.0])
    direct = HaarAveragingService(chunk_size=300, workers=2).average(su2, P0, sampler_for(su2), 1000, seed=4)
    wrapped = haar_average(su2, P0, sampler_for(su2), 1000, seed=4, chunk_size=300)
    assert direct.gram.tobytes() == wrapped.gram.tobytes()


def test_averaging_rejects_empty_runs(su2):
    with pytest.raises(UsageError):
        haar_average(su2, diagonal_product([1.0, 1.0, 1.0]), sampler_for(su2), 0, seed=0)


def test_averaging_checks_dimensions(su2):
    with pytest.raises(DimensionMismatchError):
        haar_average(su2, ScalarProduct(np.eye(8)), sampler_for(su2), 10, seed=0)


@pytest.mark.slow
def test_su2_average_approaches_an_invariant_product(su2):
    P0 = diagonal_product([1.0, 2.0, 3.0])
    averaged = haar_average(su2, P0, sampler_for(su2), 100_000, seed=0)
    # the invariant products on su2 are multiples of the identity; the trace is preserved
    np.testing.assert_allclose(averaged.gram, 2.0 * np.eye(3), atol=0.03)
    assert averaged.invariance_residual <= 0.06


@pytest.mark.slow
def test_so3_average_approaches_an_invariant_product(so3):
    P0 = diagonal_product([1.0, 4.0, 7.0])
    averaged = haar_average(so3, P0, sampler_for(so3), 100_000, seed=1)
    np.testing.assert_allclose(averaged.gram, 4.0 * np.eye(3), atol=0.1)
