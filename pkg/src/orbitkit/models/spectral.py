"""Spectral data of ad_w."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from orbitkit.models.algebra import Element, Matrix, Vector

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # pragma: no cover - Python 3.10 backport of enum.StrEnum
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class Verdict(StrEnum):
    SKEW_SYMMETRIC = "SkewSymmetric"
    NON_DIAGONALIZABLE = "NonDiagonalizable"
    OFF_AXIS_EIGENVALUE = "OffAxisEigenvalue"


@dataclass(frozen=True)
class EigenCluster:
    value: complex
    algebraic_multiplicity: int
    geometric_multiplicity: int

    @property
    def is_semisimple(self) -> bool:
        return self.algebraic_multiplicity == self.geometric_multiplicity


@dataclass(frozen=True)
class SkewClassification:
    verdict: Verdict
    eigenvalues: tuple[complex, ...]
    clusters: tuple[EigenCluster, ...]
    tol: float
    offending_eigenvalue: complex | None = None

    @property
    def is_skew_symmetric(self) -> bool:
        return self.verdict is Verdict.SKEW_SYMMETRIC

    def describe(self) -> str:
        if self.verdict is Verdict.OFF_AXIS_EIGENVALUE and self.offending_eigenvalue is not None:
            lam = self.offending_eigenvalue
            return f"{self.verdict.value}({lam.real:.6g}{lam.imag:+.6g}i)"
        return self.verdict.value


@dataclass(frozen=True, eq=False)
class EigenBlock:
    """Real eigenblock E_mu; columns come in pairs (x, J x)."""

    mu: float
    basis: npt.NDArray[np.float64]

    @property
    def dim(self) -> int:
        return int(self.basis.shape[1])


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    w: Element
    ad_w: Matrix
    kernel_basis: npt.NDArray[np.float64]
    blocks: tuple[EigenBlock, ...]
    tol: float
    classification: SkewClassification

    @property
    def dim(self) -> int:
        return int(self.w.shape[0])

    @property
    def image_basis(self) -> npt.NDArray[np.float64]:
        if not self.blocks:
            return np.zeros((self.dim, 0))
        return np.hstack([block.basis for block in self.blocks])

    @property
    def image_dim(self) -> int:
        return sum(block.dim for block in self.blocks)

    @property
    def kernel_dim(self) -> int:
        return int(self.kernel_basis.shape[1])

    @property
    def mus(self) -> tuple[float, ...]:
        return tuple(block.mu for block in self.blocks)

    @cached_property
    def adapted_basis(self) -> Matrix:
        """[kernel | E_mu1 | E_mu2 | ...] as columns."""
        return np.hstack([self.kernel_basis, self.image_basis])

    @cached_property
    def coordinate_map(self) -> Matrix:
        return np.linalg.inv(self.adapted_basis)

    def block_slices(self) -> list[slice]:
        """Column ranges of each block inside the image basis."""
        slices = []
        start = 0
        for block in self.blocks:
            slices.append(slice(start, start + block.dim))
            start += block.dim
        return slices

    def image_coordinates(self, v: Vector) -> Vector:
        """Coefficients of the image component of v (projection along the kernel)."""
        coords = self.coordinate_map @ v
        return coords[self.kernel_dim :]

    def kernel_projector(self) -> Matrix:
        k = self.kernel_dim
        return self.kernel_basis @ self.coordinate_map[:k]

    def image_projector(self) -> Matrix:
        return self.image_basis @ self.coordinate_map[self.kernel_dim :]

    def block_projector(self, index: int) -> Matrix:
        offset = self.kernel_dim
        for i, sl in enumerate(self.block_slices()):
            if i == index:
                rows = self.coordinate_map[offset + sl.start : offset + sl.stop]
                return self.blocks[index].basis @ rows
        raise IndexError(f"block index {index} out of range ({len(self.blocks)} blocks)")

    def projector_completeness_residual(self) -> float:
        total = self.kernel_projector()
        for i in range(len(self.blocks)):
            total = total + self.block_projector(i)
        return float(np.abs(total - np.eye(self.dim)).max(initial=0.0))

    def block_invariance_residual(self) -> float:
        worst = 0.0
        for i in range(len(self.blocks)):
            proj = self.block_projector(i)
            leak = (np.eye(self.dim) - proj) @ self.ad_w @ proj
            worst = max(worst, float(np.linalg.norm(leak, 2)))
        return worst

    def block_square_residual(self) -> float:
        """max over blocks of ||(ad_w^2 + mu^2) restricted to E_mu|| / mu^2."""
        worst = 0.0
        for block in self.blocks:
            defect = self.ad_w @ (self.ad_w @ block.basis) + block.mu**2 * block.basis
            scale = max(1.0, float(np.linalg.norm(block.basis, 2)))
            worst = max(worst, float(np.linalg.norm(defect, 2)) / (scale * block.mu**2))
        return worst

    def summary(self) -> dict[str, object]:
        return {
            "kernel_dim": self.kernel_dim,
            "image_dim": self.image_dim,
            "blocks": [{"mu": block.mu, "dim": block.dim} for block in self.blocks],
        }
