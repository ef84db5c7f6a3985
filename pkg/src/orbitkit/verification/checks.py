"""Individual acceptance checks; each returns a CriterionResult."""

import math
from collections.abc import Callable

import numpy as np

from orbitkit.errors import DegenerateFormError
from orbitkit.models import Element, LieAlgebra, ScalarProduct, Verdict
from orbitkit.schemas import ClassificationPayload, CriterionResult, OrbitReportPayload
from orbitkit.services.catalog import catalog_load
from orbitkit.services.equivariant import EquivariantMap, IdentityMap, ScaledMap
from orbitkit.services.haar import RotationSampler, UnitarySampler, sampler_for
from orbitkit.services.lie import adjoint_of_exp, jacobi_residual, killing_form
from orbitkit.services.nijenhuis import nijenhuis_flat, nijenhuis_sweep, tensor_field
from orbitkit.services.orbit import (
    block_orthogonality_residual,
    block_scaling_residual,
    canonical_J,
    compatibility_residual,
    d_omega_s_residual,
    ds_pairing,
    eigenvector_transport_residual,
    j_conjugation_residual,
    kaehler_metric,
    kernel_membership_residual,
    orbit_report,
    two_form_matrix,
)
from orbitkit.services.poisson import (
    LinearFunction,
    jacobi_poisson_residual,
    kks,
    kks_invariance_residual,
    leaf_tangent_residual,
    lie_poisson,
)
from orbitkit.services.products import diagonal_product, haar_average, invariance_residual
from orbitkit.services.spectral import classify_operator, classify_skew, decompose
from orbitkit.utils.serialization import dumps

CATALOG_SAMPLE = ("su2", "so3", "su3", "sl2r", "heisenberg3", "sl2c_real", "abelian(4)")
COMPACT = ("su2", "so3", "su3")
ORBIT_ALGEBRAS = ("su2", "su3", "sl2r", "sl2c_real")

# (label, measured value, threshold); a check passes when value <= threshold
Measurement = tuple[str, float, float]


def _result(criterion: int, name: str, measurements: list[Measurement]) -> CriterionResult:
    failed = [label for label, value, limit in measurements if not value <= limit]
    worst = max((value for _, value, _ in measurements), default=0.0)
    detail: dict[str, object] = {label: value for label, value, _ in measurements}
    if failed:
        detail["failed"] = failed
    return CriterionResult(
        id=criterion,
        name=name,
        passed=not failed,
        worst_residual=worst,
        detail=detail,
    )


def _flag(ok: bool) -> float:
    return 0.0 if ok else 1.0


def sample_skew(name: str, rng: np.random.Generator) -> Element:
    """A random skew-symmetric element of a catalog algebra."""
    if name in COMPACT:
        return rng.standard_normal(catalog_load(name).dim)
    if name == "sl2r":
        alg = catalog_load(name)
        c = rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0])
        elliptic = np.array([0.0, c, -c])
        return adjoint_of_exp(alg, np.array([1.0, 0.0, 0.0]), rng.uniform(-0.5, 0.5)).apply(elliptic)
    if name == "sl2c_real":
        # su(2) inside sl(2, C): ih, e - f, i(e + f)
        a, b, c = rng.standard_normal(3)
        return np.array([0.0, b, -b, a, c, c])
    raise ValueError(f"no skew sampler for {name}")


def check_algebra_validity(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name in CATALOG_SAMPLE:
        alg = catalog_load(name)
        measurements.append((f"{name}.jacobi", jacobi_residual(alg), 1e-12))
        measurements.append((f"{name}.killing_invariance", invariance_residual(alg, killing_form(alg)), 1e-10))
    return _result(1, "algebra validity", measurements)


def check_classification(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name in COMPACT:
        alg = catalog_load(name)
        ok = all(
            classify_skew(alg, rng.standard_normal(alg.dim)).verdict is Verdict.SKEW_SYMMETRIC
            for _ in range(10)
        )
        measurements.append((f"{name}.random_skew", _flag(ok), 0.5))

    sl2r = catalog_load("sl2r")
    h = classify_skew(sl2r, [1.0, 0.0, 0.0])
    measurements.append(("sl2r.h_off_axis", _flag(h.verdict is Verdict.OFF_AXIS_EIGENVALUE), 0.5))
    elliptic = classify_skew(sl2r, [0.0, 1.0, -1.0])
    measurements.append(("sl2r.elliptic_skew", _flag(elliptic.verdict is Verdict.SKEW_SYMMETRIC), 0.5))

    heisenberg = catalog_load("heisenberg3")
    nilpotent = ([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 2.0, 0.0])
    ok = all(classify_skew(heisenberg, x).verdict is Verdict.NON_DIAGONALIZABLE for x in nilpotent)
    measurements.append(("heisenberg3.nilpotent", _flag(ok), 0.5))

    minkowski = classify_operator(np.array([[0.0, 1.0], [1.0, 0.0]]))
    real_pair = sorted(z.real for z in minkowski.eigenvalues)
    measurements.append(
        ("minkowski.off_axis", _flag(minkowski.verdict is Verdict.OFF_AXIS_EIGENVALUE), 0.5)
    )
    measurements.append(
        ("minkowski.eigenvalues", float(np.abs(np.array(real_pair) - [-1.0, 1.0]).max()), 1e-12)
    )
    return _result(2, "classification", measurements)


def check_spectral(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name in COMPACT:
        alg = catalog_load(name)
        completeness = invariance = square = 0.0
        for _ in range(50):
            decomp = decompose(alg, rng.standard_normal(alg.dim))
            completeness = max(completeness, decomp.projector_completeness_residual())
            invariance = max(invariance, decomp.block_invariance_residual())
            square = max(square, decomp.block_square_residual())
        measurements += [
            (f"{name}.projector_completeness", completeness, 1e-8),
            (f"{name}.block_invariance", invariance, 1e-8),
            (f"{name}.block_square", square, 1e-8),
        ]
    return _result(3, "spectral decomposition", measurements)


def check_complex_structure(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name in ORBIT_ALGEBRAS:
        alg = catalog_load(name)
        w = sample_skew(name, rng)
        J = canonical_J(decompose(alg, w))
        conjugation = 0.0
        for _ in range(10):
            v = rng.standard_normal(alg.dim)
            v /= np.linalg.norm(v)
            conjugation = max(conjugation, j_conjugation_residual(alg, w, v, rng.uniform(-0.5, 0.5)))
        measurements += [
            (f"{name}.j_square", J.square_residual(), 1e-10),
            (f"{name}.eigenvector_transport", eigenvector_transport_residual(alg, J), 1e-9),
            (f"{name}.conjugation", conjugation, 1e-8),
        ]
    return _result(4, "canonical complex structure", measurements)


def _signature_oracle(alg: LieAlgebra, P: ScalarProduct, w: Element) -> tuple[int, int, int]:
    """Signature of <., .>/mu assembled block by block, independent of omega and J."""
    decomp = decompose(alg, w)
    blocks = [block.basis.T @ P.gram @ block.basis / block.mu for block in decomp.blocks]
    eigenvalues = np.concatenate([np.linalg.eigvalsh(b) for b in blocks]) if blocks else np.zeros(0)
    scale = float(np.abs(eigenvalues).max(initial=0.0))
    p = int(np.count_nonzero(eigenvalues > 1e-9 * scale))
    q = int(np.count_nonzero(eigenvalues < -1e-9 * scale))
    return (p, q, len(eigenvalues) - p - q)


SIGNATURE_CASES: tuple[tuple[str, tuple[float, ...], tuple[int, int, int]], ...] = (
    ("su2", (0.0, 0.0, 1.0), (2, 0, 0)),
    ("su3", (0.3, -0.7, 1.1, 0.2, 0.5, -0.4, 0.9, 0.6), (6, 0, 0)),
    ("sl2r", (0.0, 1.0, -1.0), (0, 2, 0)),
    ("sl2c_real", (0.0, 0.0, 0.0, 1.0, 0.0, 0.0), (2, 2, 0)),
)


def check_semi_kaehler(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name, element, expected in SIGNATURE_CASES:
        alg = catalog_load(name)
        P = killing_form(alg)
        s = IdentityMap()
        w = np.array(element)
        decomp = decompose(alg, w)
        J = canonical_J(decomp)
        omega = two_form_matrix(alg, P, s, decomp)
        g = kaehler_metric(omega, J)
        pairing = ds_pairing(alg, P, s, decomp)
        measurements += [
            (f"{name}.compatibility", compatibility_residual(omega, J), 1e-10),
            (f"{name}.symmetry", g.symmetry_residual, 1e-10),
            (f"{name}.block_orthogonality", block_orthogonality_residual(g, J), 1e-8),
            (f"{name}.block_scaling", block_scaling_residual(g, pairing, J), 1e-8),
            (f"{name}.signature", _flag(g.signature == expected), 0.5),
            (f"{name}.signature_oracle", _flag(_signature_oracle(alg, P, w) == expected), 0.5),
        ]
        if name == "su2":
            measurements.append(("su2.gram_2I", float(np.abs(g.matrix - 2.0 * np.eye(2)).max()), 1e-10))
    return _result(5, "semi-Kaehler structure", measurements)


def check_transgression(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    maps: list[EquivariantMap] = [IdentityMap(), ScaledMap(2.5), ScaledMap(-0.75)]
    for name in ORBIT_ALGEBRAS:
        alg = catalog_load(name)
        P = killing_form(alg)
        w = sample_skew(name, rng)
        for s in maps:
            worst = max(
                d_omega_s_residual(alg, P, s, w, *rng.standard_normal((3, alg.dim))) for _ in range(100)
            )
            measurements.append((f"{name}.{s.label}.d_omega_s", worst, 1e-10))
            measurements.append((f"{name}.{s.label}.kernel_membership", kernel_membership_residual(alg, s, w), 1e-14))
        try:
            two_form_matrix(alg, P, ScaledMap(0.0), decompose(alg, w))
            degenerate_raised = False
        except DegenerateFormError:
            degenerate_raised = True
        measurements.append((f"{name}.scale0_degenerate", _flag(degenerate_raised), 0.5))
    return _result(6, "transgression forms", measurements)


def _shear_field_4d() -> tuple[Callable[[np.ndarray], np.ndarray], Callable[[np.ndarray, np.ndarray], np.ndarray]]:
    """J with r = exp(-x1) in coordinates (x1, y1, x2, y2)."""

    def evaluate(p: np.ndarray) -> np.ndarray:
        r = math.exp(-p[0])
        return np.array(
            [
                [0.0, -1.0 / r, 0.0, 0.0],
                [r, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, -r],
                [0.0, 0.0, 1.0 / r, 0.0],
            ]
        )

    def derivative(p: np.ndarray, y: np.ndarray) -> np.ndarray:
        r = math.exp(-p[0])
        # dr = -r dx1, d(1/r) = (1/r) dx1
        return y[0] * np.array(
            [
                [0.0, -1.0 / r, 0.0, 0.0],
                [-r, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, r],
                [0.0, 0.0, 1.0 / r, 0.0],
            ]
        )

    return evaluate, derivative


def check_nijenhuis(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name in ORBIT_ALGEBRAS:
        alg = catalog_load(name)
        worst = 0.0
        for _ in range(20):
            decomp = decompose(alg, sample_skew(name, rng))
            worst = max(worst, nijenhuis_sweep(alg, decomp, canonical_J(decomp), rng))
        measurements.append((f"{name}.orbit_nijenhuis", worst, 1e-8))

    constant = tensor_field(4, lambda p: np.arange(16.0).reshape(4, 4))
    p, x, y = rng.standard_normal((3, 4))
    measurements.append(("flat.constant", float(np.abs(nijenhuis_flat(constant, p, x, y)).max()), 0.0))

    evaluate, derivative = _shear_field_4d()
    exact = tensor_field(4, evaluate, derivative)
    approx = exact.without_derivative()
    disagreement = 0.0
    for _ in range(5):
        p, x, y = rng.uniform(-0.5, 0.5, (3, 4))
        gap = nijenhuis_flat(exact, p, x, y) - nijenhuis_flat(approx, p, x, y)
        disagreement = max(disagreement, float(np.abs(gap).max()))
    measurements.append(("flat.fd_vs_exact", disagreement, 10.0 * exact.fd_step**2))
    return _result(7, "Nijenhuis integrability", measurements)


def check_poisson(rng: np.random.Generator) -> CriterionResult:
    measurements: list[Measurement] = []
    for name in ORBIT_ALGEBRAS:
        alg = catalog_load(name)
        jacobi = consistency = leaf = transport = 0.0
        for _ in range(20):
            v, w, q, alpha = rng.standard_normal((4, alg.dim))
            jacobi = max(jacobi, jacobi_poisson_residual(alg, v, w, q, alpha))
            bracket_value = lie_poisson(alg, LinearFunction(v), LinearFunction(w), alpha)
            consistency = max(consistency, abs(kks(alg, alpha, v, w) - bracket_value))
            leaf = max(leaf, leaf_tangent_residual(alg, alpha))
            generator = rng.standard_normal(alg.dim)
            generator /= np.linalg.norm(generator)
            transport = max(
                transport, kks_invariance_residual(alg, alpha, v, w, generator, rng.uniform(-0.5, 0.5))
            )
        measurements += [
            (f"{name}.poisson_jacobi", jacobi, 1e-12 * (1.0 + _scale(alg))),
            (f"{name}.kks_consistency", consistency, 1e-12),
            (f"{name}.leaf_tangent", leaf, 1e-12 * (1.0 + _scale(alg))),
            (f"{name}.kks_invariance", transport, 1e-8),
        ]
    return _result(8, "Lie-Poisson structure", measurements)


def _scale(alg: LieAlgebra) -> float:
    return float(np.abs(alg.structure_constants).max(initial=0.0)) ** 2


HAAR_SAMPLES = 100_000


def check_haar_average(seed: int) -> CriterionResult:
    alg = catalog_load("su2")
    sampler = sampler_for(alg)
    P0 = diagonal_product([1.0, 2.0, 3.0])
    averaged = haar_average(alg, P0, sampler, HAAR_SAMPLES, seed)
    oracle = haar_average(alg, P0, sampler, HAAR_SAMPLES, seed + 1)
    invariant = haar_average(alg, killing_form(alg), sampler, HAAR_SAMPLES, seed)
    target = 2.0 * np.eye(3)
    measurements: list[Measurement] = [
        ("su2.invariance_residual", invariance_residual(alg, averaged), 0.02),
        ("su2.distance_to_2I", float(np.abs(averaged.gram - target).max()), 0.03),
        ("su2.second_seed_distance", float(np.abs(averaged.gram - oracle.gram).max()), 0.03),
        ("su2.invariant_input", float(np.abs(invariant.gram - killing_form(alg).gram).max()), 0.03),
    ]
    return _result(9, "Haar averaging", measurements)


def _deterministic_snapshot(seed: int, workers: int) -> str:
    su2 = catalog_load("su2")
    su3 = catalog_load("su3")
    rng = np.random.default_rng(seed)
    w = rng.standard_normal(su3.dim)
    report = orbit_report(su3, killing_form(su3), IdentityMap(), w, seed=seed)
    averaged = haar_average(
        su3, diagonal_product(list(range(1, 9))), UnitarySampler(3), 4096, seed, chunk_size=512, workers=workers
    )
    rotated = haar_average(
        catalog_load("so3"), diagonal_product([1.0, 2.0, 3.0]), RotationSampler(), 1000, seed, workers=workers
    )
    return dumps(
        {
            "classification": ClassificationPayload.from_classification(classify_skew(su2, [0.0, 0.0, 1.0])),
            "report": OrbitReportPayload.from_report(report),
            "su3_average": averaged.gram,
            "so3_average": rotated.gram,
        }
    )


def check_determinism(seed: int) -> CriterionResult:
    first = _deterministic_snapshot(seed, workers=1)
    second = _deterministic_snapshot(seed, workers=2)
    return _result(10, "determinism", [("snapshot_bytes_differ", _flag(first == second), 0.5)])
