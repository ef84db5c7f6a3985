"""Real Lie algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from orbitkit.errors import DimensionMismatchError, InvalidAlgebraError

Vector: TypeAlias = npt.NDArray[np.float64]
Matrix: TypeAlias = npt.NDArray[np.float64]

# coordinates in the algebra basis
Element: TypeAlias = Vector
# coordinates in the dual basis, alpha(v) = sum_i alpha_i v_i
DualVector: TypeAlias = Vector
# M @ u == [w, u]
AdMatrix: TypeAlias = Matrix


def _frozen(array: npt.ArrayLike) -> npt.NDArray[np.float64]:
    out = np.array(array, dtype=np.float64, copy=True)
    out.setflags(write=False)
    return out


def jacobi_residual_of_tensor(c: npt.NDArray[np.float64]) -> float:
    """Max over basis triples (z, x, y) of |[z,[x,y]] - [[z,x],y] - [x,[z,y]]|.

    Works on raw tensors so deliberately broken tables can be measured too.
    """
    n = c.shape[0]
    worst = 0.0
    for a in range(n):
        # [e_a, [e_i, e_j]]
        outer = np.einsum("ijm,mk->ijk", c, c[a])
        # [[e_a, e_i], e_j]
        left = np.einsum("im,mjk->ijk", c[a], c)
        # [e_i, [e_a, e_j]]
        right = np.einsum("jm,imk->ijk", c[a], c)
        defect = np.linalg.norm(outer - left - right, axis=-1)
        worst = max(worst, float(defect.max(initial=0.0)))
    return worst


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants c[i, j, k] with [e_i, e_j] = sum_k c[i, j, k] e_k."""

    structure_constants: npt.NDArray[np.float64]
    basis_labels: tuple[str, ...]
    name: str | None = None
    jacobi_tol: float = 1e-10
    check_jacobi: bool = True
    jacobi_defect: float = field(init=False)

    def __post_init__(self) -> None:
        c = _frozen(self.structure_constants)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]) or c.shape[0] == 0:
            raise InvalidAlgebraError(f"structure constants must be n x n x n, got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise InvalidAlgebraError("structure constants contain non-finite values")
        if not np.array_equal(c, -c.transpose(1, 0, 2)):
            raise InvalidAlgebraError("structure constants are not antisymmetric in (i, j)")
        labels = tuple(self.basis_labels)
        if len(labels) != c.shape[0]:
            raise InvalidAlgebraError(
                f"{len(labels)} basis labels given for a {c.shape[0]}-dimensional algebra"
            )

        object.__setattr__(self, "structure_constants", c)
        object.__setattr__(self, "basis_labels", labels)

        defect = jacobi_residual_of_tensor(c)
        object.__setattr__(self, "jacobi_defect", defect)
        if self.check_jacobi and defect > self.jacobi_tol:
            raise InvalidAlgebraError(
                f"Jacobi identity violated: residual {defect:.3e} > {self.jacobi_tol:.3e}"
            )

    @property
    def dim(self) -> int:
        return int(self.structure_constants.shape[0])

    @property
    def label(self) -> str:
        return self.name or f"algebra[{self.dim}]"

    def element(self, coeffs: npt.ArrayLike) -> Element:
        x = np.asarray(coeffs, dtype=np.float64)
        if x.shape != (self.dim,):
            raise DimensionMismatchError(
                f"expected a vector of length {self.dim} for {self.label}, got shape {x.shape}"
            )
        return x

    def basis_vector(self, index: int) -> Element:
        e = np.zeros(self.dim)
        e[index] = 1.0
        return e


@dataclass(frozen=True, eq=False)
class AdjointMatrix:
    """Ad(exp(t v)) as a matrix acting on algebra coordinates."""

    matrix: Matrix
    generator: Element
    time: float
    inverse: Matrix

    def apply(self, x: Element) -> Element:
        return self.matrix @ x

    def conjugate(self, operator: Matrix) -> Matrix:
        """A @ operator @ A^-1."""
        return self.matrix @ operator @ self.inverse
