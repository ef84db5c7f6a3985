"""Lie-Poisson structure on the dual of a Lie algebra."""

from abc import ABC, abstractmethod
from collections.abc import Callable

import numpy as np
import numpy.typing as npt
from scipy.linalg import orth

from orbitkit.config import settings
from orbitkit.models import DualVector, Element, LieAlgebra, Matrix
from orbitkit.services.lie import ad, adjoint_of_exp, bracket, coadjoint_action


class PoissonFunction(ABC):
    @abstractmethod
    def value(self, alpha: DualVector) -> float:
        pass

    @abstractmethod
    def gradient(self, alpha: DualVector) -> Element:
        """dF_alpha, an element of g = (g*)*."""


class LinearFunction(PoissonFunction):
    """F_v(alpha) = alpha(v)."""

    def __init__(self, v: Element) -> None:
        self.v = np.asarray(v, dtype=np.float64)

    def value(self, alpha: DualVector) -> float:
        return float(np.asarray(alpha) @ self.v)

    def gradient(self, alpha: DualVector) -> Element:
        return self.v


class BlackBoxFunction(PoissonFunction):
    """Gradient by central differences with step fd_step * (1 + ||alpha||)."""

    def __init__(self, callback: Callable[[DualVector], float], fd_step: float | None = None) -> None:
        self.callback = callback
        self.fd_step = settings.fd_step_poisson if fd_step is None else fd_step

    def value(self, alpha: DualVector) -> float:
        return float(self.callback(np.asarray(alpha, dtype=np.float64)))

    def gradient(self, alpha: DualVector) -> Element:
        alpha = np.asarray(alpha, dtype=np.float64)
        h = self.fd_step * (1.0 + float(np.linalg.norm(alpha)))
        grad = np.empty_like(alpha)
        for i in range(alpha.shape[0]):
            step = np.zeros_like(alpha)
            step[i] = h
            grad[i] = (self.value(alpha + step) - self.value(alpha - step)) / (2.0 * h)
        return grad


def lie_poisson(alg: LieAlgebra, F: PoissonFunction, G: PoissonFunction, alpha: DualVector) -> float:
    """{F, G}(alpha) = alpha([dF_alpha, dG_alpha])."""
    alpha = alg.element(alpha)
    return float(alpha @ bracket(alg, F.gradient(alpha), G.gradient(alpha)))


def poisson_sharp(alg: LieAlgebra, alpha: DualVector, v: Element) -> DualVector:
    """#_alpha(v) = alpha o ad_v."""
    return ad(alg, v).T @ alg.element(alpha)


def coadjoint_fundamental(alg: LieAlgebra, v: Element, alpha: DualVector) -> DualVector:
    """X*_v(alpha) = -alpha o ad_v."""
    return -ad(alg, v).T @ alg.element(alpha)


def kks(alg: LieAlgebra, alpha: DualVector, v: Element, w: Element) -> float:
    return float(alg.element(alpha) @ bracket(alg, v, w))


def jacobi_poisson_residual(
    alg: LieAlgebra, v: Element, w: Element, q: Element, alpha: DualVector
) -> float:
    # {F_v, F_w} = F_[v,w], so every nested bracket stays linear
    alpha = alg.element(alpha)
    total = (
        bracket(alg, bracket(alg, v, w), q)
        + bracket(alg, bracket(alg, q, v), w)
        + bracket(alg, bracket(alg, w, q), v)
    )
    return abs(float(alpha @ total))


def sharp_matrix(alg: LieAlgebra, alpha: DualVector) -> Matrix:
    """Column j is #_alpha(e_j)."""
    alpha = alg.element(alpha)
    return np.einsum("jik,k->ij", alg.structure_constants, alpha)


def _distance_to_span(vectors: Matrix, span: npt.NDArray[np.float64]) -> float:
    if vectors.size == 0:
        return 0.0
    residual = vectors - span @ (span.T @ vectors)
    return float(np.linalg.norm(residual, axis=0).max(initial=0.0))


def leaf_tangent_residual(alg: LieAlgebra, alpha: DualVector, tol: float | None = None) -> float:
    """im # against span{X*_u(alpha)}, both directions, plus kks = pi on basis pairs."""
    tol = settings.tol if tol is None else tol
    alpha = alg.element(alpha)
    sharp = sharp_matrix(alg, alpha)
    fundamental = np.column_stack(
        [coadjoint_fundamental(alg, alg.basis_vector(i), alpha) for i in range(alg.dim)]
    )
    rcond = tol
    sharp_span = orth(sharp, rcond=rcond) if np.any(sharp) else np.zeros((alg.dim, 0))
    fundamental_span = orth(fundamental, rcond=rcond) if np.any(fundamental) else np.zeros((alg.dim, 0))

    worst = max(
        _distance_to_span(sharp, fundamental_span),
        _distance_to_span(fundamental, sharp_span),
    )
    # pi_alpha(e_i, e_j) = <#_alpha(e_i), e_j>
    pi = sharp.T
    omega = np.einsum("ijk,k->ij", alg.structure_constants, alpha)
    worst = max(worst, float(np.abs(pi - omega).max(initial=0.0)))
    return worst


def leaf_dimension(alg: LieAlgebra, alpha: DualVector, tol: float | None = None) -> int:
    """Rank of v -> alpha o ad_v, the dimension of the coadjoint orbit through alpha."""
    tol = settings.tol if tol is None else tol
    sharp = sharp_matrix(alg, alpha)
    if not np.any(sharp):
        return 0
    singular = np.linalg.svd(sharp, compute_uv=False)
    return int(np.count_nonzero(singular > tol * singular[0]))


def kks_invariance_residual(
    alg: LieAlgebra,
    alpha: DualVector,
    v: Element,
    w: Element,
    generator: Element,
    t: float,
) -> float:
    """|kks(Ad*(g) alpha, Ad(g) v, Ad(g) w) - kks(alpha, v, w)| for g = exp(t generator)."""
    adjoint = adjoint_of_exp(alg, generator, t)
    moved = kks(alg, coadjoint_action(adjoint, alpha), adjoint.apply(v), adjoint.apply(w))
    return abs(moved - kks(alg, alpha, v, w))
