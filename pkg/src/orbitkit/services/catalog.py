"""Built-in catalog of real Lie algebras.

Bases and conventions
---------------------
su2      e1, e2, e3 with e_k = -(i/2) sigma_k, so [e_i, e_j] = eps_ijk e_k.
so3      L1, L2, L3 with [L_i, L_j] = eps_ijk L_k (rotation generators).
su3      e1..e8 with e_k = -(i/2) lambda_k (Gell-Mann order), so
         [e_a, e_b] = f_abc e_c with the standard su(3) constants.
         diag(i, -i, 0) = -2 e3.
sl2r     h, e, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h.
heisenberg3
         X, Y, Z with [X, Y] = Z.
sl2c_real
         h, e, f, ih, ie, if: the realification of sl(2, C). For complex basis
         vectors x, y: [ix, y] = i[x, y] and [ix, iy] = -[x, y]. Traces are real
         traces, so the Killing form is twice the real part of the complex one.
abelian(n)
         a1..an with all brackets zero.
"""

import logging
import re
from functools import cache

import numpy as np
import numpy.typing as npt

from orbitkit.config import settings
from orbitkit.errors import UnknownAlgebraError
from orbitkit.models import LieAlgebra

logger = logging.getLogger(__name__)

COMPACT_ALGEBRAS = ("su2", "so3", "su3")
CATALOG_NAMES = ("su2", "so3", "su3", "sl2r", "heisenberg3", "sl2c_real", "abelian(n)")

_ABELIAN = re.compile(r"^abelian\((\d+)\)$")

_PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)

_GELL_MANN = np.array(
    [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
        [[1 / np.sqrt(3), 0, 0], [0, 1 / np.sqrt(3), 0], [0, 0, -2 / np.sqrt(3)]],
    ],
    dtype=np.complex128,
)


def su_matrix_basis(n: int) -> npt.NDArray[np.complex128]:
    """Anti-Hermitian basis e_k = -(i/2) lambda_k of su(n), n in {2, 3}.

    tr(e_a e_b) = -delta_ab / 2, so coordinates are x_a = -2 Re tr(e_a X).
    """
    if n == 2:
        return -0.5j * _PAULI
    if n == 3:
        return -0.5j * _GELL_MANN
    raise UnknownAlgebraError(f"no matrix basis for su({n})")


def su_coordinates(basis: npt.NDArray[np.complex128], matrices: np.ndarray) -> np.ndarray:
    """Coordinates of (a stack of) anti-Hermitian matrices in `basis`."""
    return -2.0 * np.einsum("aij,...ji->...a", basis, matrices).real


def _constants_from_matrices(basis: npt.NDArray[np.complex128]) -> npt.NDArray[np.float64]:
    dim = basis.shape[0]
    c = np.zeros((dim, dim, dim))
    for a in range(dim):
        for b in range(a + 1, dim):
            commutator = basis[a] @ basis[b] - basis[b] @ basis[a]
            coords = su_coordinates(basis, commutator)
            coords[np.abs(coords) < 1e-14] = 0.0
            c[a, b] = coords
            c[b, a] = -coords
    return c


def _from_sparse(dim: int, entries: list[tuple[int, int, int, float]]) -> npt.NDArray[np.float64]:
    c = np.zeros((dim, dim, dim))
    for i, j, k, value in entries:
        c[i, j, k] = value
        c[j, i, k] = -value
    return c


def _levi_civita() -> npt.NDArray[np.float64]:
    return _from_sparse(3, [(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, 1.0)])


def _sl2c_real() -> npt.NDArray[np.float64]:
    complex_table = _from_sparse(3, [(0, 1, 1, 2.0), (0, 2, 2, -2.0), (1, 2, 0, 1.0)])
    c = np.zeros((6, 6, 6))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                value = complex_table[i, j, k]
                if value == 0.0:
                    continue
                c[i, j, k] = value
                c[i + 3, j, k + 3] = value
                c[i, j + 3, k + 3] = value
                c[i + 3, j + 3, k] = -value
    return c


def _build(name: str) -> LieAlgebra:
    tol = settings.jacobi_tol
    if name == "su2":
        return LieAlgebra(_constants_from_matrices(su_matrix_basis(2)), ("e1", "e2", "e3"), "su2", tol)
    if name == "so3":
        return LieAlgebra(_levi_civita(), ("L1", "L2", "L3"), "so3", tol)
    if name == "su3":
        labels = tuple(f"e{k}" for k in range(1, 9))
        return LieAlgebra(_constants_from_matrices(su_matrix_basis(3)), labels, "su3", tol)
    if name == "sl2r":
        table = _from_sparse(3, [(0, 1, 1, 2.0), (0, 2, 2, -2.0), (1, 2, 0, 1.0)])
        return LieAlgebra(table, ("h", "e", "f"), "sl2r", tol)
    if name == "heisenberg3":
        return LieAlgebra(_from_sparse(3, [(0, 1, 2, 1.0)]), ("X", "Y", "Z"), "heisenberg3", tol)
    if name == "sl2c_real":
        return LieAlgebra(_sl2c_real(), ("h", "e", "f", "ih", "ie", "if"), "sl2c_real", tol)

    match = _ABELIAN.match(name)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise UnknownAlgebraError("abelian(n) needs n >= 1")
        labels = tuple(f"a{k}" for k in range(1, n + 1))
        return LieAlgebra(np.zeros((n, n, n)), labels, name, tol)

    raise UnknownAlgebraError(
        f"unknown algebra '{name}'; available: {', '.join(CATALOG_NAMES)}"
    )


@cache
def catalog_load(name: str) -> LieAlgebra:
    """Load a catalog algebra by name (values are immutable, so they are cached)."""
    alg = _build(name.strip().lower())
    logger.debug(f"Loaded catalog algebra {alg.label} (dim {alg.dim})")
    return alg
