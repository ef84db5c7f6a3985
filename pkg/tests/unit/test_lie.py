"""Tests for brackets, adjoint operators and the Killing form."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from orbitkit.errors import DimensionMismatchError
from orbitkit.services.catalog import catalog_load
from orbitkit.services.lie import (
    ad,
    ad_homomorphism_residual,
    adjoint_homomorphism_residual,
    adjoint_of_exp,
    bracket,
    coadjoint_action,
    conjugation_residual,
    is_semisimple,
    jacobi_residual,
    killing_form,
)

coords = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
vectors3 = arrays(np.float64, 3, elements=coords)


def test_su2_bracket_table(su2):
    e1, e2, e3 = np.eye(3)
    np.testing.assert_allclose(bracket(su2, e1, e2), e3, atol=1e-15)
    np.testing.assert_allclose(bracket(su2, e2, e3), e1, atol=1e-15)
    np.testing.assert_allclose(bracket(su2, e3, e1), e2, atol=1e-15)


def test_sl2r_bracket_table(sl2r):
    h, e, f = np.eye(3)
    np.testing.assert_array_equal(bracket(sl2r, h, e), 2 * e)
    np.testing.assert_array_equal(bracket(sl2r, h, f), -2 * f)
    np.testing.assert_array_equal(bracket(sl2r, e, f), h)


def test_bracket_rejects_wrong_length(su2):
    with pytest.raises(DimensionMismatchError):
        bracket(su2, np.ones(2), np.ones(3))


@given(x=vectors3, y=vectors3, z=vectors3, a=coords)
@settings(max_examples=50, deadline=None)
def test_bracket_bilinear_and_antisymmetric(x, y, z, a):
    alg = catalog_load("su2")
    np.testing.assert_allclose(
        bracket(alg, a * x + y, z), a * bracket(alg, x, z) + bracket(alg, y, z), atol=1e-9
    )
    np.testing.assert_allclose(bracket(alg, x, y), -bracket(alg, y, x), atol=1e-9)
    np.testing.assert_allclose(bracket(alg, x, x), np.zeros(3), atol=1e-9)


def test_ad_matches_bracket(su3, rng):
    w, u = rng.standard_normal((2, 8))
    np.testing.assert_allclose(ad(su3, w) @ u, bracket(su3, w, u), atol=1e-12)


def test_ad_of_e3_rotates_the_plane(su2):
    expected = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    np.testing.assert_allclose(ad(su2, np.array([0.0, 0.0, 1.0])), expected, atol=1e-15)


@pytest.mark.parametrize("name", ["su2", "so3", "su3", "sl2r", "heisenberg3", "sl2c_real", "abelian(4)"])
def test_catalog_satisfies_jacobi(name):
    assert jacobi_residual(catalog_load(name)) <= 1e-12


def test_broken_table_violates_jacobi(broken_su2):
    assert jacobi_residual(broken_su2) > 0.5


@pytest.mark.parametrize("name", ["su2", "su3", "sl2r", "sl2c_real"])
def test_ad_is_a_homomorphism(name, rng):
    alg = catalog_load(name)
    for _ in range(5):
        u, v = rng.standard_normal((2, alg.dim))
        assert ad_homomorphism_residual(alg, u, v) <= 1e-10


def test_killing_form_of_su2_is_twice_identity(su2):
    np.testing.assert_allclose(killing_form(su2).gram, 2 * np.eye(3), atol=1e-14)


def test_killing_form_of_sl2r(sl2r):
    K = killing_form(sl2r).gram
    assert K[0, 0] == pytest.approx(-8.0)
    assert K[1, 2] == pytest.approx(-4.0)
    assert K[1, 1] == 0.0
    assert K[2, 2] == 0.0


def test_killing_form_of_sl2c_realification(sl2c):
    K = killing_form(sl2c).gram
    assert K[1, 2] == pytest.approx(-8.0)
    assert K[4, 5] == pytest.approx(8.0)


def test_killing_form_is_invariant(su3):
    assert killing_form(su3).invariance_residual <= 1e-12


def test_semisimplicity(su2, su3, sl2r, sl2c, heisenberg, abelian4):
    assert is_semisimple(su2)
    assert is_semisimple(su3)
    assert is_semisimple(sl2r)
    assert is_semisimple(sl2c)
    assert not is_semisimple(heisenberg)
    assert not is_semisimple(abelian4)
    assert killing_form(abelian4).degenerate


def test_adjoint_of_exp_rotates_e1_into_e2(su2):
    A = adjoint_of_exp(su2, np.array([0.0, 0.0, 1.0]), np.pi / 2)
    np.testing.assert_allclose(A.apply(np.array([1.0, 0.0, 0.0])), [0.0, 1.0, 0.0], atol=1e-14)


def test_adjoint_at_zero_time_is_identity(su3, rng):
    A = adjoint_of_exp(su3, rng.standard_normal(8), 0.0)
    np.testing.assert_array_equal(A.matrix, np.eye(8))


def test_adjoint_fixes_its_generator(sl2r, rng):
    v = rng.standard_normal(3)
    A = adjoint_of_exp(sl2r, v, 0.8)
    np.testing.assert_allclose(A.apply(v), v, atol=1e-12)


@pytest.mark.parametrize("name", ["su2", "su3", "sl2r", "sl2c_real"])
def test_adjoint_is_an_automorphism(name, rng):
    alg = catalog_load(name)
    for _ in range(5):
        v, x, y = rng.standard_normal((3, alg.dim))
        A = adjoint_of_exp(alg, v, float(rng.uniform(-1, 1)))
        assert adjoint_homomorphism_residual(alg, A, x, y) <= 1e-10
        assert conjugation_residual(alg, A, x) <= 1e-8


def test_coadjoint_action_preserves_pairing(su3, rng):
    alpha, v, x = rng.standard_normal((3, 8))
    A = adjoint_of_exp(su3, v, 0.6)
    assert coadjoint_action(A, alpha) @ A.apply(x) == pytest.approx(alpha @ x, abs=1e-12)
