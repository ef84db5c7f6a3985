"""Complex structure, two-forms and metrics on an orbit tangent space."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from orbitkit.models.algebra import Element, Matrix
from orbitkit.models.spectral import SkewClassification, SpectralDecomposition


@dataclass(frozen=True, eq=False)
class ComplexStructure:
    """J_w in the image basis; `image_rows` recovers image coordinates of a vector."""

    basepoint: Element
    image_basis: npt.NDArray[np.float64]
    matrix: Matrix
    image_rows: npt.NDArray[np.float64]
    mus: tuple[float, ...]
    block_sizes: tuple[int, ...]

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def operator(self) -> Matrix:
        """J_w on the whole algebra, extended by zero on ker ad_w."""
        return self.image_basis @ self.matrix @ self.image_rows

    def apply(self, x: Element) -> Element:
        return self.operator @ x

    def block_slices(self) -> list[slice]:
        bounds = np.cumsum((0, *self.block_sizes))
        return [slice(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:])]

    def square_residual(self) -> float:
        """|| J^2 + I ||_max."""
        return float(np.abs(self.matrix @ self.matrix + np.eye(self.dim)).max(initial=0.0))

    def block_residual(self) -> float:
        """Largest entry of J coupling two different eigenblocks."""
        mask = np.ones_like(self.matrix, dtype=bool)
        for sl in self.block_slices():
            mask[sl, sl] = False
        return float(np.abs(self.matrix[mask]).max(initial=0.0))


@dataclass(frozen=True, eq=False)
class TwoFormMatrix:
    """Omega[a, b] = omega(X_{u_a}, X_{u_b}) with X_{u_a}(w) = tangent_basis[:, a]."""

    basepoint: Element
    tangent_basis: npt.NDArray[np.float64]
    generators: npt.NDArray[np.float64]
    matrix: Matrix

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.float64)
        object.__setattr__(self, "matrix", (m - m.T) / 2.0)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def singular_values(self) -> npt.NDArray[np.float64]:
        return np.linalg.svd(self.matrix, compute_uv=False)


@dataclass(frozen=True, eq=False)
class MetricGram:
    basepoint: Element
    tangent_basis: npt.NDArray[np.float64]
    matrix: Matrix
    signature: tuple[int, int, int]
    eigenvalues: npt.NDArray[np.float64]
    threshold: float
    symmetry_residual: float

    @property
    def is_positive_definite(self) -> bool:
        p, q, z = self.signature
        return q == 0 and z == 0 and p > 0


@dataclass(frozen=True, eq=False)
class OrbitStructureReport:
    algebra: str
    basepoint: Element
    product_label: str
    map_label: str
    tol: float
    classification: SkewClassification | None = None
    decomposition: SpectralDecomposition | None = None
    complex_structure: ComplexStructure | None = None
    two_form: TwoFormMatrix | None = None
    metric: MetricGram | None = None
    residuals: dict[str, float] = field(default_factory=dict)
    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def signature(self) -> tuple[int, int, int] | None:
        return self.metric.signature if self.metric is not None else None

    @property
    def is_kaehler(self) -> bool:
        return self.metric is not None and self.metric.is_positive_definite

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)
