"""Brackets, adjoint operators and the Killing form."""

import numpy as np
from scipy.linalg import expm

from orbitkit.config import settings
from orbitkit.models import AdjointMatrix, AdMatrix, DualVector, Element, LieAlgebra, ScalarProduct
from orbitkit.models.algebra import jacobi_residual_of_tensor
from orbitkit.models.products import ad_invariance_residual, degeneracy_ratio


def bracket(alg: LieAlgebra, x: Element, y: Element) -> Element:
    x = alg.element(x)
    y = alg.element(y)
    return np.einsum("i,j,ijk->k", x, y, alg.structure_constants)


def ad(alg: LieAlgebra, w: Element) -> AdMatrix:
    w = alg.element(w)
    # column j is [w, e_j]
    return np.einsum("i,ijk->kj", w, alg.structure_constants)


def basis_ads(alg: LieAlgebra) -> np.ndarray:
    """Stack of ad(e_i), shape (n, n, n)."""
    return np.transpose(alg.structure_constants, (0, 2, 1))


def jacobi_residual(alg: LieAlgebra) -> float:
    return jacobi_residual_of_tensor(alg.structure_constants)


def ad_homomorphism_residual(alg: LieAlgebra, u: Element, v: Element) -> float:
    """|| [ad_u, ad_v] - ad_[u,v] ||_max."""
    ad_u = ad(alg, u)
    ad_v = ad(alg, v)
    defect = ad_u @ ad_v - ad_v @ ad_u - ad(alg, bracket(alg, u, v))
    return float(np.abs(defect).max())


def killing_form(alg: LieAlgebra) -> ScalarProduct:
    """K(u, v) = -tr(ad_u ad_v); may be degenerate (e.g. solvable algebras)."""
    c = alg.structure_constants
    gram = -np.einsum("iab,jba->ij", c, c)
    return ScalarProduct(
        gram=gram,
        label="killing",
        invariance_residual=ad_invariance_residual(gram, basis_ads(alg)),
        allow_degenerate=True,
        degeneracy_threshold=settings.degeneracy_threshold,
    )


def is_semisimple(alg: LieAlgebra, threshold: float | None = None) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    threshold = settings.degeneracy_threshold if threshold is None else threshold
    return degeneracy_ratio(killing_form(alg).gram) >= threshold


def adjoint_of_exp(alg: LieAlgebra, v: Element, t: float) -> AdjointMatrix:
    """Ad(exp(t v)) = exp(t ad_v), via scaling and squaring."""
    v = alg.element(v)
    generator = t * ad(alg, v)
    return AdjointMatrix(
        matrix=expm(generator),
        generator=v.copy(),
        time=float(t),
        inverse=expm(-generator),
    )


def adjoint_homomorphism_residual(
    alg: LieAlgebra, adjoint: AdjointMatrix, x: Element, y: Element
) -> float:
    """|| A[x, y] - [Ax, Ay] || for A = Ad(exp(t v))."""
    lhs = adjoint.apply(bracket(alg, x, y))
    rhs = bracket(alg, adjoint.apply(x), adjoint.apply(y))
    return float(np.linalg.norm(lhs - rhs))


def conjugation_residual(alg: LieAlgebra, adjoint: AdjointMatrix, w: Element) -> float:
    """|| ad_{Ad(g) w} - Ad(g) ad_w Ad(g)^-1 ||_max."""
    lhs = ad(alg, adjoint.apply(w))
    rhs = adjoint.conjugate(ad(alg, w))
    return float(np.abs(lhs - rhs).max())


def coadjoint_action(adjoint: AdjointMatrix, alpha: DualVector) -> DualVector:
    """Ad*(g) alpha = alpha o Ad(g^-1)."""
    return adjoint.inverse.T @ alpha
