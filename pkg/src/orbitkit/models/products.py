"""Symmetric bilinear forms on a Lie algebra."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from orbitkit.errors import DegenerateProductError, DimensionMismatchError, NonSymmetricProductError
from orbitkit.models.algebra import Element, Matrix


def degeneracy_ratio(gram: Matrix) -> float:
    """|det G| / ||G||^n, computed in log space."""
    n = gram.shape[0]
    norm = float(np.linalg.norm(gram, 2))
    if norm == 0.0:
        return 0.0
    sign, logdet = np.linalg.slogdet(gram)
    if sign == 0:
        return 0.0
    return float(np.exp(logdet - n * np.log(norm)))


@dataclass(frozen=True, eq=False)
class ScalarProduct:
    """<u, v> = u^T G v with an optional cached Ad-invariance residual."""

    gram: Matrix
    label: str = "custom"
    invariance_residual: float | None = None
    degeneracy_threshold: float = 1e-12
    allow_degenerate: bool = False
    degenerate: bool = field(init=False)

    def __post_init__(self) -> None:
        g = np.array(self.gram, dtype=np.float64, copy=True)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionMismatchError(f"Gram matrix must be square, got shape {g.shape}")
        asymmetry = float(np.abs(g - g.T).max(initial=0.0))
        if asymmetry > 1e-12 * (1.0 + float(np.abs(g).max(initial=0.0))):
            raise NonSymmetricProductError(
                f"Gram matrix of '{self.label}' is not symmetric (max |G - G^T| = {asymmetry:.3e})"
            )
        # round-off only
        g = (g + g.T) / 2.0
        g.setflags(write=False)
        object.__setattr__(self, "gram", g)

        degenerate = degeneracy_ratio(g) < self.degeneracy_threshold
        object.__setattr__(self, "degenerate", degenerate)
        if degenerate and not self.allow_degenerate:
            raise DegenerateProductError(
                f"scalar product '{self.label}' is degenerate; pass allow_degenerate=True to keep it"
            )

    @property
    def dim(self) -> int:
        return int(self.gram.shape[0])

    def pair(self, u: Element, v: Element) -> float:
        return float(u @ self.gram @ v)

    def restricted(self, basis: npt.NDArray[np.float64]) -> Matrix:
        """Gram matrix of the product on the columns of `basis`."""
        return basis.T @ self.gram @ basis

    def with_residual(self, residual: float) -> ScalarProduct:
        return ScalarProduct(
            gram=self.gram,
            label=self.label,
            invariance_residual=residual,
            degeneracy_threshold=self.degeneracy_threshold,
            allow_degenerate=self.allow_degenerate,
        )


def ad_invariance_residual(gram: Matrix, ads: npt.NDArray[np.float64]) -> float:
    """max_i || ad_i^T G + G ad_i ||_max over a stack of basis adjoint matrices."""
    if ads.shape[0] == 0:
        return 0.0
    defect = np.transpose(ads, (0, 2, 1)) @ gram + gram @ ads
    return float(np.abs(defect).max(initial=0.0))
