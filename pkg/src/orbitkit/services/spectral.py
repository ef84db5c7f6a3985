"""Complexified eigenanalysis of ad_w.

Eigenvalues are clustered before multiplicities are compared: values within
max(tol * (1 + max|lambda|), sqrt(eps) * ||M||) of each other are merged.
The sqrt(eps) floor keeps the numerically split eigenvalues of a 2x2 Jordan
block inside one cluster. A cluster counts as semisimple when M - lambda I
loses as many singular values as it has members, measured at the cluster
spread plus the merge radius.
"""

import logging

import numpy as np
import numpy.typing as npt
from scipy.linalg import LinAlgError, eigvals, orth, svd, svdvals

from orbitkit.config import settings
from orbitkit.errors import EigensolverError, NotSkewSymmetricError
from orbitkit.models import (
    EigenBlock,
    EigenCluster,
    Element,
    LieAlgebra,
    Matrix,
    ScalarProduct,
    SkewClassification,
    SpectralDecomposition,
    Verdict,
)
from orbitkit.services.lie import ad

logger = logging.getLogger(__name__)

_SQRT_EPS = float(np.sqrt(np.finfo(np.float64).eps))


def _cluster(values: npt.NDArray[np.complex128], radius: float) -> list[list[int]]:
    """Single-linkage clusters of eigenvalue indices, ordered deterministically."""
    n = len(values)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= radius:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    def key(members: list[int]) -> tuple[float, float]:
        centre = complex(np.mean(values[members]))
        return (round(centre.imag, 12), round(centre.real, 12))

    return sorted(groups.values(), key=key)


def _rank_deficiency(m: npt.NDArray[np.complex128], threshold: float) -> int:
    singular = svdvals(m)
    return int(np.count_nonzero(singular <= threshold))


def classify_operator(m: Matrix, tol: float | None = None) -> SkewClassification:
    tol = settings.tol if tol is None else tol
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise EigensolverError(f"operator must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise EigensolverError("operator contains non-finite entries")

    n = m.shape[0]
    try:
        values = eigvals(m)
    except (LinAlgError, ValueError) as e:
        raise EigensolverError(f"eigenvalue computation failed: {e}") from e

    norm = float(np.linalg.norm(m, 2))
    largest = float(np.abs(values).max(initial=0.0))
    radius = max(tol * (1.0 + largest), _SQRT_EPS * norm)
    rank_floor = tol * norm

    clusters: list[EigenCluster] = []
    offending: complex | None = None
    defective = False
    for members in _cluster(values, radius):
        centre = complex(np.mean(values[members]))
        size = len(members)
        # zero cluster and conjugate-symmetric spectra: snap the imaginary/real noise
        if abs(centre) <= radius:
            centre = 0j
        spread = float(np.abs(values[members] - centre).max())
        threshold = max(rank_floor, spread + radius)
        # eigenvalues of other clusters inside the threshold also lower the rank
        outside = np.delete(values, members)
        neighbours = int(np.count_nonzero(np.abs(outside - centre) <= threshold))
        geometric = max(_rank_deficiency(m - centre * np.eye(n), threshold) - neighbours, 0)
        cluster = EigenCluster(centre, size, min(geometric, size))
        clusters.append(cluster)

        if abs(centre) > tol and abs(centre.real) > tol * (1.0 + abs(centre)):
            if offending is None or centre.real > offending.real:
                offending = centre
        if not cluster.is_semisimple:
            defective = True

    if offending is not None:
        verdict = Verdict.OFF_AXIS_EIGENVALUE
    elif defective:
        verdict = Verdict.NON_DIAGONALIZABLE
    else:
        verdict = Verdict.SKEW_SYMMETRIC

    ordered = tuple(complex(v) for v in sorted(values, key=lambda z: (z.imag, z.real)))
    classification = SkewClassification(
        verdict=verdict,
        eigenvalues=ordered,
        clusters=tuple(clusters),
        tol=tol,
        offending_eigenvalue=offending,
    )
    logger.debug(f"Classified {n}x{n} operator: {classification.describe()}")
    return classification


def classify_skew(alg: LieAlgebra, w: Element, tol: float | None = None) -> SkewClassification:
    return classify_operator(ad(alg, w), tol)


def _smallest_singular_subspace(m: npt.NDArray[np.generic], count: int) -> npt.NDArray[np.generic]:
    """Right singular vectors belonging to the `count` smallest singular values."""
    if count == 0:
        return np.zeros((m.shape[1], 0), dtype=m.dtype)
    _, _, vh = svd(m)
    return vh[-count:].conj().T


def _paired_basis(span: Matrix, ad_w: Matrix, mu: float, tol: float) -> Matrix:
    """Re-pair an orthonormal basis of E_mu as columns (x1, J x1, x2, J x2, ...)."""
    j_op = ad_w / mu
    dim = span.shape[1]
    columns: list[npt.NDArray[np.float64]] = []
    candidates = span.copy()
    while len(columns) < dim:
        if columns:
            current = orth(np.column_stack(columns))
            residual = candidates - current @ (current.T @ candidates)
        else:
            residual = candidates
        norms = np.linalg.norm(residual, axis=0)
        pick = int(np.argmax(norms))
        if norms[pick] <= tol:
            raise EigensolverError("could not complete a J-adapted basis of an eigenblock")
        x = residual[:, pick] / norms[pick]
        columns.extend([x, j_op @ x])
    return np.column_stack(columns)


def decompose(alg: LieAlgebra, w: Element, tol: float | None = None) -> SpectralDecomposition:
    tol = settings.tol if tol is None else tol
    w = alg.element(w)
    ad_w = ad(alg, w)
    classification = classify_operator(ad_w, tol)
    if not classification.is_skew_symmetric:
        raise NotSkewSymmetricError(classification)

    n = alg.dim
    norm = float(np.linalg.norm(ad_w, 2))
    rcond = tol

    kernel_dim = sum(c.algebraic_multiplicity for c in classification.clusters if c.value == 0j)
    # subspace sizes come from the cluster multiplicities so they agree with the verdict
    kernel = _smallest_singular_subspace(ad_w, kernel_dim) if norm > 0.0 else np.eye(n)

    blocks: list[EigenBlock] = []
    for cluster in classification.clusters:
        if cluster.value == 0j or cluster.value.imag < 0:
            continue
        mu = abs(cluster.value.imag)
        shifted = ad_w.astype(np.complex128) - 1j * mu * np.eye(n)
        eigenvectors = _smallest_singular_subspace(shifted, cluster.algebraic_multiplicity)
        real_span = orth(np.hstack([eigenvectors.real, eigenvectors.imag]), rcond=rcond)
        if real_span.shape[1] != 2 * cluster.algebraic_multiplicity:
            raise EigensolverError(f"real eigenblock for mu={mu:.6g} has the wrong dimension")
        blocks.append(EigenBlock(mu=mu, basis=_paired_basis(real_span, ad_w, mu, tol)))

    blocks.sort(key=lambda block: block.mu)
    decomposition = SpectralDecomposition(
        w=w.copy(),
        ad_w=ad_w,
        kernel_basis=kernel,
        blocks=tuple(blocks),
        tol=tol,
        classification=classification,
    )
    if decomposition.kernel_dim + decomposition.image_dim != n:
        raise EigensolverError("kernel and eigenblocks do not span the algebra")
    return decomposition


def skew_adapted_product(decomp: SpectralDecomposition) -> ScalarProduct:
    """Positive definite product for which ad_w is skew.

    The kernel basis and every (x, J x) pair are declared orthonormal; in that
    basis ad_w is block diagonal with blocks mu * [[0, -1], [1, 0]].
    """
    inverse = decomp.coordinate_map
    return ScalarProduct(gram=inverse.T @ inverse, label="skew-adapted")
