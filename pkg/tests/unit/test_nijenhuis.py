"""Tests for Nijenhuis tensors."""

import math
from dataclasses import replace

import numpy as np
import pytest

from orbitkit.errors import BlockMembershipError, DimensionMismatchError, ImageEscapeError
from orbitkit.services.catalog import catalog_load
from orbitkit.services.nijenhuis import nijenhuis_flat, nijenhuis_orbit, nijenhuis_sweep, tensor_field
from orbitkit.services.orbit import canonical_J
from orbitkit.services.spectral import decompose
from orbitkit.verification.checks import sample_skew

J0 = np.array([[0.0, -1.0], [1.0, 0.0]])


def _sheared_plane():
    """S J0 S^-1 with S = [[1, f], [0, 1]] and f = sin(x) + y^2."""

    def shear(p):
        return np.array([[1.0, math.sin(p[0]) + p[1] ** 2], [0.0, 1.0]])

    def evaluate(p):
        S = shear(p)
        return S @ J0 @ np.linalg.inv(S)

    def derivative(p, y):
        S = shear(p)
        S_inv = np.linalg.inv(S)
        dS = np.array([[0.0, math.cos(p[0]) * y[0] + 2.0 * p[1] * y[1]], [0.0, 0.0]])
        return dS @ J0 @ S_inv - S @ J0 @ S_inv @ dS @ S_inv

    return tensor_field(2, evaluate, derivative)


def _warped_product():
    """J with r = exp(-x1) in coordinates (x1, y1, x2, y2); not integrable."""

    def evaluate(p):
        r = math.exp(-p[0])
        return np.array(
            [[0.0, -1.0 / r, 0.0, 0.0], [r, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, -r], [0.0, 0.0, 1.0 / r, 0.0]]
        )

    def derivative(p, y):
        r = math.exp(-p[0])
        return y[0] * np.array(
            [[0.0, -1.0 / r, 0.0, 0.0], [-r, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, r], [0.0, 0.0, 1.0 / r, 0.0]]
        )

    return tensor_field(4, evaluate, derivative)


def test_constant_field_is_integrable(rng):
    field = tensor_field(4, lambda p: np.arange(16.0).reshape(4, 4))
    p, x, y = rng.standard_normal((3, 4))
    np.testing.assert_array_equal(nijenhuis_flat(field, p, x, y), np.zeros(4))


def test_every_planar_structure_is_integrable(rng):
    field = _sheared_plane()
    for _ in range(5):
        p, x, y = rng.uniform(-1, 1, (3, 2))
        np.testing.assert_allclose(field.at(p) @ field.at(p), -np.eye(2), atol=1e-12)
        np.testing.assert_allclose(nijenhuis_flat(field, p, x, y), np.zeros(2), atol=1e-12)
        np.testing.assert_allclose(nijenhuis_flat(field.without_derivative(), p, x, y), np.zeros(2), atol=1e-6)


def test_warped_structure_has_unit_torsion(rng):
    field = _warped_product()
    x = np.array([1.0, 0.0, 0.0, 0.0])
    y = np.array([0.0, 0.0, 1.0, 0.0])
    for p in rng.uniform(-0.5, 0.5, (3, 4)):
        N = nijenhuis_flat(field, p, x, y)
        np.testing.assert_allclose(N, [0.0, 0.0, -1.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(nijenhuis_flat(field.without_derivative(), p, x, y), N, atol=1e-8)


def test_finite_differences_converge_quadratically(rng):
    field = _warped_product()
    p, x, y = rng.uniform(-0.5, 0.5, (3, 4))
    exact = nijenhuis_flat(field, p, x, y)
    gap = nijenhuis_flat(field.without_derivative(), p, x, y) - exact
    assert np.abs(gap).max() <= 10.0 * field.fd_step**2


def test_flat_formula_checks_shapes():
    field = tensor_field(2, lambda p: J0)
    with pytest.raises(DimensionMismatchError):
        nijenhuis_flat(field, np.zeros(3), np.zeros(3), np.zeros(3))


def test_field_shape_is_checked():
    field = tensor_field(3, lambda p: J0)
    with pytest.raises(DimensionMismatchError):
        field.at(np.zeros(3))


def test_orbit_nijenhuis_vanishes_on_su2(su2):
    decomp = decompose(su2, np.array([0.0, 0.0, 1.0]))
    J = canonical_J(decomp)
    N = nijenhuis_orbit(su2, decomp, J, np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
    np.testing.assert_allclose(N, np.zeros(3), atol=1e-9)


def test_orbit_nijenhuis_across_su3_blocks(su3, su3_cartan, rng):
    decomp = decompose(su3, su3_cartan)
    J = canonical_J(decomp)
    first, second = decomp.blocks
    for _ in range(5):
        u = first.basis @ rng.standard_normal(first.dim)
        v = second.basis @ rng.standard_normal(second.dim)
        assert np.linalg.norm(nijenhuis_orbit(su3, decomp, J, u, v)) <= 1e-8
        np.testing.assert_allclose(
            nijenhuis_orbit(su3, decomp, J, u, v), -nijenhuis_orbit(su3, decomp, J, v, u), atol=1e-10
        )


def test_orbit_nijenhuis_of_zero(su3, su3_cartan):
    decomp = decompose(su3, su3_cartan)
    u = decomp.blocks[0].basis[:, 0]
    np.testing.assert_array_equal(nijenhuis_orbit(su3, decomp, canonical_J(decomp), u, np.zeros(8)), np.zeros(8))


def test_orbit_nijenhuis_needs_block_vectors(su2):
    decomp = decompose(su2, np.array([0.0, 0.0, 1.0]))
    J = canonical_J(decomp)
    with pytest.raises(BlockMembershipError):
        nijenhuis_orbit(su2, decomp, J, np.array([1.0, 0.0, 1.0]), np.array([0.0, 1.0, 0.0]))


def test_kernel_leak_is_reported(su2):
    decomp = decompose(su2, np.array([0.0, 0.0, 1.0]))
    broken = replace(canonical_J(decomp), matrix=np.zeros((2, 2)))
    with pytest.raises(ImageEscapeError):
        nijenhuis_orbit(su2, decomp, broken, np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))


@pytest.mark.parametrize("name", ["su2", "su3", "sl2r", "sl2c_real"])
def test_canonical_J_is_integrable(name, rng):
    alg = catalog_load(name)
    for _ in range(3):
        decomp = decompose(alg, sample_skew(name, rng))
        assert nijenhuis_sweep(alg, decomp, canonical_J(decomp), rng) <= 1e-8


def test_orbit_nijenhuis_anticommutes_with_J(su3, su3_cartan, rng):
    decomp = decompose(su3, su3_cartan)
    J = canonical_J(decomp)
    # a block-preserving conjugate of J is still a complex structure but no longer integrable
    pieces = [np.eye(block.dim) + 0.3 * rng.standard_normal((block.dim, block.dim)) for block in decomp.blocks]
    S = np.zeros_like(J.matrix)
    for piece, block_slice in zip(pieces, J.block_slices()):
        S[block_slice, block_slice] = piece
    bent = replace(J, matrix=S @ J.matrix @ np.linalg.inv(S))
    np.testing.assert_allclose(bent.matrix @ bent.matrix, -np.eye(bent.dim), atol=1e-10)

    u = decomp.blocks[0].basis @ rng.standard_normal(decomp.blocks[0].dim)
    v = decomp.blocks[1].basis @ rng.standard_normal(decomp.blocks[1].dim)
    n_uv = nijenhuis_orbit(su3, decomp, bent, u, v)
    assert np.linalg.norm(n_uv) > 1e-6
    np.testing.assert_allclose(
        nijenhuis_orbit(su3, decomp, bent, bent.apply(u), v), -bent.apply(n_uv), atol=1e-9
    )
