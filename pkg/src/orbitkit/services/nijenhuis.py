"""Nijenhuis tensors: the flat coordinate formula and the closed orbit form."""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from orbitkit.config import settings
from orbitkit.errors import BlockMembershipError, DimensionMismatchError, ImageEscapeError
from orbitkit.models import ComplexStructure, Element, LieAlgebra, Matrix, SpectralDecomposition
from orbitkit.services.lie import bracket

logger = logging.getLogger(__name__)

Point = npt.NDArray[np.float64]


@dataclass(frozen=True)
class TensorField:
    """A (1,1)-tensor field p -> A_p on R^n."""

    dim: int
    evaluate: Callable[[Point], Matrix]
    derivative: Callable[[Point, Point], Matrix] | None = None
    fd_step: float = 1e-5

    def at(self, p: Point) -> Matrix:
        a = np.asarray(self.evaluate(np.asarray(p, dtype=np.float64)), dtype=np.float64)
        if a.shape != (self.dim, self.dim):
            raise DimensionMismatchError(f"field returned shape {a.shape}, expected {(self.dim, self.dim)}")
        return a

    def differential(self, p: Point, y: Point) -> Matrix:
        """dA_p(y), exact when a derivative callback is given."""
        p = np.asarray(p, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        if self.derivative is not None:
            return np.asarray(self.derivative(p, y), dtype=np.float64)
        h = self.fd_step * (1.0 + float(np.linalg.norm(p)))
        return (self.at(p + h * y) - self.at(p - h * y)) / (2.0 * h)

    def without_derivative(self) -> "TensorField":
        return TensorField(self.dim, self.evaluate, None, self.fd_step)


def tensor_field(
    dim: int,
    evaluate: Callable[[Point], Matrix],
    derivative: Callable[[Point, Point], Matrix] | None = None,
    fd_step: float | None = None,
) -> TensorField:
    return TensorField(dim, evaluate, derivative, settings.fd_step_flat if fd_step is None else fd_step)


def nijenhuis_flat(field: TensorField, p: Point, x: Point, y: Point) -> Point:
    """A(dA(X)Y - dA(Y)X) - (dA(AX)Y - dA(AY)X)."""
    p = np.asarray(p, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if not (p.shape == x.shape == y.shape == (field.dim,)):
        raise DimensionMismatchError(f"point and vectors must have length {field.dim}")
    a = field.at(p)
    d_bracket = field.differential(p, x) @ y - field.differential(p, y) @ x
    twisted = field.differential(p, a @ x) @ y - field.differential(p, a @ y) @ x
    return a @ d_bracket - twisted


def _block_of(decomp: SpectralDecomposition, u: Element, tol: float) -> int | None:
    """Index of the eigenblock containing u; None for u = 0."""
    scale = float(np.linalg.norm(u))
    if scale <= tol:
        return None
    for i in range(len(decomp.blocks)):
        if np.linalg.norm(decomp.block_projector(i) @ u - u) <= tol * (1.0 + scale):
            return i
    raise BlockMembershipError("vector does not lie in a single eigenblock E_mu")


def nijenhuis_orbit(
    alg: LieAlgebra,
    decomp: SpectralDecomposition,
    J: ComplexStructure,
    u: Element,
    v: Element,
    tol: float | None = None,
) -> Element:
    """(lambda + mu) (J([u, v] - [Ju, Jv]) - [Ju, v] - [u, Jv]) for u in E_lambda, v in E_mu."""
    tol = decomp.tol if tol is None else tol
    u = alg.element(u)
    v = alg.element(v)
    first = _block_of(decomp, u, tol)
    second = _block_of(decomp, v, tol)
    if first is None or second is None:
        return np.zeros(alg.dim)

    lam = decomp.blocks[first].mu
    mu = decomp.blocks[second].mu
    ju = J.apply(u)
    jv = J.apply(v)
    grouped = bracket(alg, u, v) - bracket(alg, ju, jv)

    leak = float(np.linalg.norm(decomp.kernel_projector() @ grouped))
    scale = 1.0 + float(np.linalg.norm(u) * np.linalg.norm(v))
    if leak > tol * scale:
        raise ImageEscapeError(f"[u, v] - [Ju, Jv] has a kernel component of norm {leak:.3e}")

    return (lam + mu) * (J.apply(grouped) - bracket(alg, ju, v) - bracket(alg, u, jv))


def nijenhuis_sweep(
    alg: LieAlgebra,
    decomp: SpectralDecomposition,
    J: ComplexStructure,
    rng: np.random.Generator,
    samples: int = 1,
) -> float:
    """Largest ||N(u, v)|| over basis pairs and random combinations within every block pair."""
    worst = 0.0
    for i, first in enumerate(decomp.blocks):
        for second in decomp.blocks[i:]:
            candidates = [(a, b) for a in first.basis.T for b in second.basis.T]
            candidates += [
                (first.basis @ rng.standard_normal(first.dim), second.basis @ rng.standard_normal(second.dim))
                for _ in range(samples)
            ]
            for a, b in candidates:
                worst = max(worst, float(np.linalg.norm(nijenhuis_orbit(alg, decomp, J, a, b))))
    logger.debug(f"Nijenhuis sweep over {len(decomp.blocks)} blocks: max {worst:.3e}")
    return worst
