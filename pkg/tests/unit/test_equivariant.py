"""Tests for Ad-equivariant maps."""

import numpy as np
import pytest

from orbitkit.errors import DimensionMismatchError, MissingLinearizationError, UsageError
from orbitkit.models import ScalarProduct
from orbitkit.services.equivariant import (
    BlackBoxMap,
    IdentityMap,
    LinearMap,
    ScaledMap,
    map_from_spec,
)
from orbitkit.services.lie import killing_form


def _radial(K):
    return lambda w: w / np.sqrt(w @ K.gram @ w)


def test_identity_and_scaled_maps(su3, rng):
    w, y = rng.standard_normal((2, 8))
    np.testing.assert_array_equal(IdentityMap()(w), w)
    np.testing.assert_allclose(ScaledMap(2.5)(w), 2.5 * w)
    np.testing.assert_allclose(ScaledMap(2.5).differential(w, y), 2.5 * y)
    assert IdentityMap().equivariance_residual(su3, w) == 0.0
    assert ScaledMap(-1.0).label == "scale:-1"


def test_maps_from_products_are_equivariant(su2, rng):
    K = killing_form(su2)
    s = LinearMap.from_products(K, ScalarProduct(2 * K.gram, label="double"))
    np.testing.assert_allclose(s.matrix, 2 * np.eye(3), atol=1e-14)
    assert s.equivariance_residual(su2, rng.standard_normal(3)) <= 1e-12
    assert s.label == "products(double/killing)"


def test_projection_onto_a_torus_is_not_equivariant(su3, su3_cartan):
    projection = np.zeros((8, 8))
    projection[2, 2] = projection[7, 7] = 1.0
    s = LinearMap(projection, label="cartan-projection")
    assert s.equivariance_residual(su3, su3_cartan) == pytest.approx(2.0 / 3.0)


def test_linear_map_must_be_square():
    with pytest.raises(DimensionMismatchError):
        LinearMap(np.zeros((2, 3)))


def test_linear_differential_matrix(su2, rng):
    S = rng.standard_normal((3, 3))
    np.testing.assert_allclose(LinearMap(S).differential_matrix(np.ones(3)), S, atol=1e-15)


def test_blackbox_differential_matches_linear(rng):
    S = rng.standard_normal((4, 4))
    w, y = rng.standard_normal((2, 4))
    s = BlackBoxMap(lambda x: S @ x)
    np.testing.assert_allclose(s.differential(w, y), S @ y, atol=1e-8)


def test_blackbox_radial_map_is_equivariant(su2):
    s = BlackBoxMap(_radial(killing_form(su2)), label="radial")
    assert s.equivariance_residual(su2, np.array([0.3, -0.4, 1.2])) <= s.tolerance
    assert s.label == "radial"


def test_blackbox_has_no_linearization():
    with pytest.raises(MissingLinearizationError):
        BlackBoxMap(lambda x: x).linearization(np.ones(3))


def test_map_from_spec():
    assert isinstance(map_from_spec("identity"), IdentityMap)
    scaled = map_from_spec("scale:3")
    assert isinstance(scaled, ScaledMap)
    assert scaled.c == 3.0


@pytest.mark.parametrize("spec", ["scale:x", "cube", ""])
def test_bad_map_specs(spec):
    with pytest.raises(UsageError):
        map_from_spec(spec)
