"""Canonical complex structure, transgression forms and semi-Kaehler metrics on orbits."""

import logging
from functools import partial

import numpy as np
from scipy.linalg import block_diag, eigvalsh, pinv

from orbitkit.config import settings
from orbitkit.errors import (
    BasisMismatchError,
    DegenerateFormError,
    MissingLinearizationError,
    NonEquivariantMapError,
    OrbitKitError,
    TrivialOrbitError,
)
from orbitkit.models import (
    ComplexStructure,
    Element,
    LieAlgebra,
    Matrix,
    MetricGram,
    OrbitStructureReport,
    ScalarProduct,
    SpectralDecomposition,
    TwoFormMatrix,
)
from orbitkit.services.equivariant import EquivariantMap, IdentityMap
from orbitkit.services.lie import ad, adjoint_of_exp, bracket
from orbitkit.services.poisson import kks
from orbitkit.services.products import b_equivariance_residual, invariance_residual
from orbitkit.services.spectral import classify_skew, decompose

logger = logging.getLogger(__name__)


def fundamental_vector(alg: LieAlgebra, v: Element, w: Element) -> Element:
    """X_v(w) = [v, w] = -ad_w v."""
    return bracket(alg, v, w)


def canonical_J(decomp: SpectralDecomposition) -> ComplexStructure:
    """J_w = ad_w / mu on each real eigenblock E_mu."""
    pieces = [
        pinv(block.basis) @ decomp.ad_w @ block.basis / block.mu for block in decomp.blocks
    ]
    matrix = block_diag(*pieces) if pieces else np.zeros((0, 0))
    return ComplexStructure(
        basepoint=decomp.w,
        image_basis=decomp.image_basis,
        matrix=matrix,
        image_rows=decomp.coordinate_map[decomp.kernel_dim :],
        mus=decomp.mus,
        block_sizes=tuple(block.dim for block in decomp.blocks),
    )


def _require_equivariant(alg: LieAlgebra, s: EquivariantMap, w: Element) -> None:
    residual = s.equivariance_residual(alg, w)
    if residual > s.tolerance:
        raise NonEquivariantMapError(residual, s.tolerance)


def omega_s(
    alg: LieAlgebra,
    P: ScalarProduct,
    s: EquivariantMap,
    w: Element,
    u: Element,
    v: Element,
) -> float:
    """omega_s(X_u, X_v) at w, = <s(w), [u, v]>."""
    w = alg.element(w)
    _require_equivariant(alg, s, w)
    return P.pair(s(w), bracket(alg, u, v))


def tangent_generators(decomp: SpectralDecomposition) -> Matrix:
    """Minimum-norm u_a with X_{u_a}(w) = image_basis[:, a]."""
    return -pinv(decomp.ad_w) @ decomp.image_basis


def two_form_matrix(
    alg: LieAlgebra,
    P: ScalarProduct,
    s: EquivariantMap,
    decomp: SpectralDecomposition,
    tol: float | None = None,
    generators: Matrix | None = None,
) -> TwoFormMatrix:
    tol = decomp.tol if tol is None else tol
    if decomp.image_dim == 0:
        raise TrivialOrbitError(f"the orbit through w is a point in {alg.label}: im ad_w = 0")
    w = decomp.w
    _require_equivariant(alg, s, w)

    u = tangent_generators(decomp) if generators is None else np.asarray(generators, dtype=np.float64)
    if u.shape != decomp.image_basis.shape:
        raise BasisMismatchError(f"expected generators of shape {decomp.image_basis.shape}, got {u.shape}")

    alpha = P.gram @ s(w)
    omega = np.einsum("ia,jb,ijk,k->ab", u, u, alg.structure_constants, alpha)
    form = TwoFormMatrix(basepoint=w, tangent_basis=decomp.image_basis, generators=u, matrix=omega)

    singular = form.singular_values()
    if singular.min() <= tol * (1.0 + singular.max()):
        raise DegenerateFormError(
            f"omega_{s.label} has rank {int(np.count_nonzero(singular > tol * (1.0 + singular.max())))} "
            f"< {form.dim} on the orbit tangent space"
        )
    return form


def _check_shared_basis(omega: TwoFormMatrix, J: ComplexStructure) -> None:
    if omega.tangent_basis.shape != J.image_basis.shape or not np.allclose(
        omega.tangent_basis, J.image_basis, rtol=0.0, atol=1e-12
    ):
        raise BasisMismatchError("two-form and complex structure use different tangent bases")


def signature(matrix: Matrix, tol: float) -> tuple[tuple[int, int, int], np.ndarray, float]:
    eigenvalues = eigvalsh(matrix) if matrix.size else np.zeros(0)
    threshold = tol * float(np.linalg.norm(matrix, 2)) if matrix.size else 0.0
    p = int(np.count_nonzero(eigenvalues > threshold))
    q = int(np.count_nonzero(eigenvalues < -threshold))
    return (p, q, len(eigenvalues) - p - q), eigenvalues, threshold


def _metric_gram(basepoint: Element, basis: Matrix, raw: Matrix, tol: float) -> MetricGram:
    sym = (raw + raw.T) / 2.0
    sig, eigenvalues, threshold = signature(sym, tol)
    return MetricGram(
        basepoint=basepoint,
        tangent_basis=basis,
        matrix=sym,
        signature=sig,
        eigenvalues=eigenvalues,
        threshold=threshold,
        symmetry_residual=float(np.abs(raw - raw.T).max(initial=0.0)),
    )


def kaehler_metric(omega: TwoFormMatrix, J: ComplexStructure, tol: float | None = None) -> MetricGram:
    """g = omega(., J .) in the shared tangent basis."""
    tol = settings.tol if tol is None else tol
    _check_shared_basis(omega, J)
    metric = _metric_gram(omega.basepoint, omega.tangent_basis, omega.matrix @ J.matrix, tol)
    if metric.signature[2]:
        logger.warning(f"Metric has {metric.signature[2]} near-zero eigenvalues at threshold {metric.threshold:.3e}")
    return metric


def compatibility_residual(omega: TwoFormMatrix, J: ComplexStructure) -> float:
    """|| J^T Omega J - Omega ||_max."""
    _check_shared_basis(omega, J)
    return float(np.abs(J.matrix.T @ omega.matrix @ J.matrix - omega.matrix).max(initial=0.0))


def d_omega_s_residual(
    alg: LieAlgebra,
    P: ScalarProduct,
    s: EquivariantMap,
    w: Element,
    u: Element,
    v: Element,
    q: Element,
) -> float:
    """|d omega_s(X_u, X_v, X_q)| at w, using [X_u, X_v] = -X_[u,v]."""
    w = alg.element(w)
    linear = s.linearization(w)
    _require_equivariant(alg, s, w)
    sw = s(w)

    def ds(x: Element) -> Element:
        return linear @ fundamental_vector(alg, x, w)

    def br(x: Element, y: Element) -> Element:
        return bracket(alg, x, y)

    value = (
        P.pair(ds(u), br(v, q))
        - P.pair(ds(v), br(u, q))
        + P.pair(ds(q), br(u, v))
        + P.pair(sw, br(br(u, v), q))
        - P.pair(sw, br(br(u, q), v))
        + P.pair(sw, br(br(v, q), u))
    )
    return abs(value)


def j_conjugation_residual(
    alg: LieAlgebra, w: Element, v: Element, t: float, tol: float | None = None
) -> float:
    """|| J_{Ad(g) w} - Ad(g) J_w Ad(g)^-1 ||_max for g = exp(t v)."""
    tol = settings.tol if tol is None else tol
    J = canonical_J(decompose(alg, w, tol))
    adjoint = adjoint_of_exp(alg, v, t)
    J_moved = canonical_J(decompose(alg, adjoint.apply(J.basepoint), tol))
    return float(np.abs(J_moved.operator - adjoint.conjugate(J.operator)).max(initial=0.0))


def kernel_membership_residual(alg: LieAlgebra, s: EquivariantMap, w: Element) -> float:
    """|| ad_w s(w) || / (1 + || s(w) ||)."""
    w = alg.element(w)
    sw = s(w)
    return float(np.linalg.norm(ad(alg, w) @ sw)) / (1.0 + float(np.linalg.norm(sw)))


def center_membership_residual(alg: LieAlgebra, s: EquivariantMap, decomp: SpectralDecomposition) -> float:
    """s(w) commutes with the stabilizer ker ad_w."""
    sw = s(decomp.w)
    worst = 0.0
    for u in decomp.kernel_basis.T:
        worst = max(worst, float(np.linalg.norm(bracket(alg, u, sw))))
    return worst / (1.0 + float(np.linalg.norm(sw)))


def ds_pairing(
    alg: LieAlgebra,
    P: ScalarProduct,
    s: EquivariantMap,
    decomp: SpectralDecomposition,
    tol: float | None = None,
) -> MetricGram:
    """<ds_w x, y> on the image basis; mu * g equals it on each E_mu."""
    tol = decomp.tol if tol is None else tol
    basis = decomp.image_basis
    differential = s.differential_matrix(decomp.w)
    raw = (differential @ basis).T @ P.gram @ basis
    return _metric_gram(decomp.w, basis, raw, tol)


def eigenvector_transport_residual(alg: LieAlgebra, J: ComplexStructure) -> float:
    """max over image basis u of || X_{J u}(w) - J X_u(w) ||."""
    w = J.basepoint
    worst = 0.0
    for u in J.image_basis.T:
        lhs = fundamental_vector(alg, J.apply(u), w)
        rhs = J.apply(fundamental_vector(alg, u, w))
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return worst


def block_orthogonality_residual(metric: MetricGram, J: ComplexStructure) -> float:
    slices = J.block_slices()
    worst = 0.0
    for i, a in enumerate(slices):
        for b in slices[i + 1 :]:
            worst = max(worst, float(np.abs(metric.matrix[a, b]).max(initial=0.0)))
    return worst


def block_scaling_residual(metric: MetricGram, pairing: MetricGram, J: ComplexStructure) -> float:
    """max over blocks of || mu g|E_mu - <ds_w ., .>|E_mu ||_max."""
    worst = 0.0
    for mu, sl in zip(J.mus, J.block_slices()):
        defect = mu * metric.matrix[sl, sl] - pairing.matrix[sl, sl]
        worst = max(worst, float(np.abs(defect).max(initial=0.0)))
    return worst


def bracket_containment_residual(alg: LieAlgebra, decomp: SpectralDecomposition) -> float:
    """max || P_ker [u, v] || for u, v basis vectors of different eigenblocks."""
    kernel_projector = decomp.kernel_projector()
    worst = 0.0
    for i, first in enumerate(decomp.blocks):
        for second in decomp.blocks[i + 1 :]:
            brackets = np.einsum("ia,jb,ijk->kab", first.basis, second.basis, alg.structure_constants)
            leak = np.einsum("mk,kab->mab", kernel_projector, brackets)
            worst = max(worst, float(np.linalg.norm(leak, axis=0).max(initial=0.0)))
    return worst


def kks_pullback_residual(
    alg: LieAlgebra, P: ScalarProduct, s: EquivariantMap, omega: TwoFormMatrix
) -> float:
    """Omega against the KKS form at b(s(w)) evaluated on the same generators."""
    alpha = P.gram @ s(omega.basepoint)
    u = omega.generators
    worst = 0.0
    for a in range(omega.dim):
        for b in range(omega.dim):
            worst = max(worst, abs(omega.matrix[a, b] - kks(alg, alpha, u[:, a], u[:, b])))
    return worst


def orbit_signature(
    alg: LieAlgebra, P: ScalarProduct, s: EquivariantMap, w: Element, tol: float
) -> tuple[int, int, int]:
    decomp = decompose(alg, w, tol)
    return kaehler_metric(two_form_matrix(alg, P, s, decomp, tol), canonical_J(decomp), tol).signature


def _error(e: Exception) -> str:
    return f"{type(e).__name__}: {e}"


def orbit_report(
    alg: LieAlgebra,
    P: ScalarProduct,
    s: EquivariantMap | None,
    w: Element,
    tol: float | None = None,
    samples: int | None = None,
    seed: int | None = None,
) -> OrbitStructureReport:
    """Every structure and residual at w; failures are embedded, never raised."""
    tol = settings.tol if tol is None else tol
    samples = settings.default_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    s = s or IdentityMap()
    w = alg.element(w)
    rng = np.random.default_rng(seed)

    report = partial(
        OrbitStructureReport,
        algebra=alg.label,
        basepoint=w.copy(),
        product_label=P.label,
        map_label=s.label,
        tol=tol,
    )
    errors: list[str] = []
    warnings: list[str] = []
    residuals: dict[str, float] = {}

    try:
        classification = classify_skew(alg, w, tol)
    except OrbitKitError as e:
        return report(errors=(_error(e),))
    if not classification.is_skew_symmetric:
        message = f"NotSkewSymmetricError: element is not skew-symmetric: {classification.describe()}"
        return report(classification=classification, errors=(message,))

    try:
        decomp = decompose(alg, w, tol)
    except OrbitKitError as e:
        return report(classification=classification, errors=(_error(e),))

    residuals["projector_completeness"] = decomp.projector_completeness_residual()
    residuals["block_invariance"] = decomp.block_invariance_residual()
    residuals["block_square"] = decomp.block_square_residual()

    product_residual = invariance_residual(alg, P)
    residuals["product_invariance"] = product_residual
    if product_residual > tol:
        warnings.append(f"product '{P.label}' is not Ad-invariant (residual {product_residual:.3e})")

    J = canonical_J(decomp)
    residuals["j_square"] = J.square_residual()
    residuals["j_block"] = J.block_residual()
    residuals["eigenvector_transport"] = eigenvector_transport_residual(alg, J)
    residuals["kernel_membership"] = kernel_membership_residual(alg, s, w)
    residuals["center_membership"] = center_membership_residual(alg, s, decomp)
    residuals["bracket_containment"] = bracket_containment_residual(alg, decomp)

    probes = [(_unit(rng.standard_normal(alg.dim)), float(rng.uniform(-0.5, 0.5))) for _ in range(samples)]
    try:
        residuals["conjugation"] = max(
            (j_conjugation_residual(alg, w, v, t, tol) for v, t in probes), default=0.0
        )
    except OrbitKitError as e:
        errors.append(_error(e))

    omega = metric = None
    try:
        omega = two_form_matrix(alg, P, s, decomp, tol)
        metric = kaehler_metric(omega, J, tol)
        pairing = ds_pairing(alg, P, s, decomp, tol)
        residuals["compatibility"] = compatibility_residual(omega, J)
        residuals["metric_symmetry"] = metric.symmetry_residual
        residuals["block_orthogonality"] = block_orthogonality_residual(metric, J)
        residuals["block_scaling"] = block_scaling_residual(metric, pairing, J)
        residuals["kks_pullback"] = kks_pullback_residual(alg, P, s, omega)
        residuals["b_equivariance"] = max(
            b_equivariance_residual(alg, P, w, alg.basis_vector(i)) for i in range(alg.dim)
        )
        if metric.signature[2]:
            warnings.append(f"metric has {metric.signature[2]} near-zero eigenvalues")

        try:
            triples = [rng.standard_normal((3, alg.dim)) for _ in range(samples)]
            residuals["d_omega_s"] = max(
                (d_omega_s_residual(alg, P, s, w, *triple) for triple in triples), default=0.0
            )
        except MissingLinearizationError as e:
            warnings.append(f"d_omega_s skipped: {e}")

        changes = 0
        for v, t in probes:
            moved = adjoint_of_exp(alg, v, t).apply(w)
            if orbit_signature(alg, P, s, moved, tol) != metric.signature:
                changes += 1
        residuals["signature_changes"] = float(changes)
    except OrbitKitError as e:
        errors.append(_error(e))

    return report(
        classification=classification,
        decomposition=decomp,
        complex_structure=J,
        two_form=omega,
        metric=metric,
        residuals=residuals,
        errors=tuple(errors),
        warnings=tuple(warnings),
    )


def _unit(v: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(v))
    return v / norm if norm > 0.0 else v
