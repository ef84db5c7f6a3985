"""Tests for the built-in algebra catalog."""

import numpy as np
import pytest

from orbitkit.errors import InvalidAlgebraError, UnknownAlgebraError
from orbitkit.models import LieAlgebra
from orbitkit.services.catalog import catalog_load, su_coordinates, su_matrix_basis


@pytest.mark.parametrize(
    "name,dim",
    [("su2", 3), ("so3", 3), ("su3", 8), ("sl2r", 3), ("heisenberg3", 3), ("sl2c_real", 6), ("abelian(5)", 5)],
)
def test_catalog_dimensions(name, dim):
    alg = catalog_load(name)
    assert alg.dim == dim
    assert len(alg.basis_labels) == dim
    assert alg.label == name


def test_su2_and_so3_share_structure_constants(su2, so3):
    np.testing.assert_allclose(su2.structure_constants, so3.structure_constants, atol=1e-15)


def test_su3_structure_constants(su3):
    c = su3.structure_constants
    assert c[0, 1, 2] == pytest.approx(1.0)
    assert c[3, 4, 7] == pytest.approx(np.sqrt(3) / 2)
    assert c[3, 4, 2] == pytest.approx(0.5)
    assert c[1, 0, 2] == pytest.approx(-1.0)


def test_su3_coordinates_of_diagonal_element():
    basis = su_matrix_basis(3)
    coords = su_coordinates(basis, np.diag([1j, -1j, 0]))
    expected = np.zeros(8)
    expected[2] = -2.0
    np.testing.assert_allclose(coords, expected, atol=1e-15)


def test_su_basis_is_orthonormal_up_to_scale():
    basis = su_matrix_basis(3)
    gram = np.einsum("aij,bji->ab", basis, basis)
    np.testing.assert_allclose(gram, -0.5 * np.eye(8), atol=1e-15)


def test_abelian_brackets_vanish(abelian4):
    assert not np.any(abelian4.structure_constants)


def test_catalog_is_cached():
    assert catalog_load("su3") is catalog_load("su3")


def test_catalog_names_are_normalized():
    alg = catalog_load(" SU2 ")
    assert alg.label == "su2"
    np.testing.assert_array_equal(alg.structure_constants, catalog_load("su2").structure_constants)


@pytest.mark.parametrize("name", ["so4", "abelian(0)", "abelian(x)", ""])
def test_unknown_algebra(name):
    with pytest.raises(UnknownAlgebraError):
        catalog_load(name)


def test_catalog_algebras_are_immutable(su2):
    with pytest.raises(ValueError):
        su2.structure_constants[0, 1, 2] = 5.0


def test_algebra_rejects_non_antisymmetric_table():
    c = np.zeros((2, 2, 2))
    c[0, 1, 0] = 1.0
    with pytest.raises(InvalidAlgebraError):
        LieAlgebra(c, ("a", "b"))


def test_algebra_rejects_jacobi_violation(broken_su2):
    with pytest.raises(InvalidAlgebraError):
        LieAlgebra(broken_su2.structure_constants, broken_su2.basis_labels)
    assert broken_su2.jacobi_defect > 0.5


def test_sign_flipped_su2_is_still_a_lie_algebra(su2):
    # flipping c_12^3 gives so(2, 1)
    c = np.array(su2.structure_constants)
    c[0, 1, 2] = -1.0
    c[1, 0, 2] = 1.0
    assert LieAlgebra(c, su2.basis_labels).jacobi_defect <= 1e-12


def test_algebra_rejects_label_count(su2):
    with pytest.raises(InvalidAlgebraError):
        LieAlgebra(su2.structure_constants, ("a", "b"))
