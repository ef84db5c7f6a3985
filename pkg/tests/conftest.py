"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from orbitkit.models import LieAlgebra
from orbitkit.services.catalog import catalog_load


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def su2():
    return catalog_load("su2")


@pytest.fixture
def so3():
    return catalog_load("so3")


@pytest.fixture
def su3():
    return catalog_load("su3")


@pytest.fixture
def sl2r():
    return catalog_load("sl2r")


@pytest.fixture
def heisenberg():
    return catalog_load("heisenberg3")


@pytest.fixture
def sl2c():
    return catalog_load("sl2c_real")


@pytest.fixture
def abelian4():
    return catalog_load("abelian(4)")


@pytest.fixture
def broken_su2(su2):
    """su(2) with an extra c_12^1 = 1, which violates the Jacobi identity."""
    c = np.array(su2.structure_constants)
    c[0, 1, 0] = 1.0
    c[1, 0, 0] = -1.0
    return LieAlgebra(c, su2.basis_labels, name="broken-su2", check_jacobi=False)


@pytest.fixture
def su3_cartan():
    """diag(i, -i, 0): kernel of dim 2, blocks mu = 1 (dim 4) and mu = 2 (dim 2)."""
    w = np.zeros(8)
    w[2] = -2.0
    return w
