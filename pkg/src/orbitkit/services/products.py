"""Ad-invariant scalar products, musical maps and Haar averaging."""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from orbitkit.config import settings
from orbitkit.errors import DegenerateProductError, DimensionMismatchError, UsageError
from orbitkit.models import AdjointMatrix, DualVector, Element, LieAlgebra, Matrix, ScalarProduct
from orbitkit.models.products import ad_invariance_residual
from orbitkit.schemas.product import ProductFile
from orbitkit.services.haar import HaarSampler
from orbitkit.services.lie import ad, basis_ads, bracket, killing_form
from orbitkit.utils.metrics import haar_samples_total

logger = logging.getLogger(__name__)


def invariance_residual(alg: LieAlgebra, P: ScalarProduct) -> float:
    """max over (i, j, k) of |<[e_i, e_j], e_k> + <e_j, [e_i, e_k]>|."""
    if P.dim != alg.dim:
        raise DimensionMismatchError(f"product of dim {P.dim} used with {alg.label} (dim {alg.dim})")
    return ad_invariance_residual(P.gram, basis_ads(alg))


def with_invariance(alg: LieAlgebra, P: ScalarProduct) -> ScalarProduct:
    if P.invariance_residual is not None:
        return P
    return P.with_residual(invariance_residual(alg, P))


def operator_skew_residual(P: ScalarProduct, m: Matrix) -> float:
    """|| M^T G + G M ||_max: zero iff M is skew with respect to P."""
    m = np.asarray(m, dtype=np.float64)
    if m.shape != P.gram.shape:
        raise DimensionMismatchError(f"operator of shape {m.shape} against a {P.dim}x{P.dim} product")
    return float(np.abs(m.T @ P.gram + P.gram @ m).max(initial=0.0))


def transport_residual(P: ScalarProduct, adjoint: AdjointMatrix, u: Element, v: Element) -> float:
    """|<Au, Av> - <u, v>| for A = Ad(exp(t x))."""
    return abs(P.pair(adjoint.apply(u), adjoint.apply(v)) - P.pair(u, v))


def musical_b(P: ScalarProduct, w: Element) -> DualVector:
    if P.degenerate:
        raise DegenerateProductError(f"b is not an isomorphism for the degenerate product '{P.label}'")
    return P.gram @ np.asarray(w, dtype=np.float64)


def musical_sharp(P: ScalarProduct, alpha: DualVector) -> Element:
    if P.degenerate:
        raise DegenerateProductError(f"# is undefined for the degenerate product '{P.label}'")
    return np.linalg.solve(P.gram, np.asarray(alpha, dtype=np.float64))


def b_equivariance_residual(alg: LieAlgebra, P: ScalarProduct, w: Element, v: Element) -> float:
    """|| b(X_v(w)) - X*_v(b(w)) || with X_v(w) = [v, w] and X*_v(alpha) = -alpha o ad_v."""
    lhs = P.gram @ bracket(alg, v, w)
    rhs = -ad(alg, v).T @ (P.gram @ alg.element(w))
    return float(np.linalg.norm(lhs - rhs))


def _chunk_sum(
    sampler: HaarSampler, gram: Matrix, count: int, seed: np.random.SeedSequence
) -> Matrix:
    rng = np.random.default_rng(seed)
    samples = sampler.sample(count, rng)
    # sum_s A_s^T G A_s
    return np.einsum("sji,jk,skl->il", samples, gram, samples)


class HaarAveragingService:
    """Monte-Carlo mean of Ad(g)^T G0 Ad(g) over Haar-distributed g.

    Every chunk owns a child of SeedSequence(seed) and partial sums are added
    in chunk order, so the result does not depend on the worker count.
    """

    def __init__(
        self,
        chunk_size: int = settings.haar_chunk_size,
        workers: int = settings.haar_workers,
    ) -> None:
        if chunk_size < 1 or workers < 1:
            raise UsageError(f"chunk size and workers must be positive, got {chunk_size} and {workers}")
        self.chunk_size = chunk_size
        self.workers = workers

    def chunk_counts(self, n_samples: int) -> list[int]:
        counts = [self.chunk_size] * (n_samples // self.chunk_size)
        if n_samples % self.chunk_size:
            counts.append(n_samples % self.chunk_size)
        return counts

    def average(
        self,
        alg: LieAlgebra,
        P0: ScalarProduct,
        sampler: HaarSampler,
        n_samples: int,
        seed: int,
    ) -> ScalarProduct:
        if n_samples < 1:
            raise UsageError("haar_average needs at least one sample")
        if P0.dim != alg.dim or sampler.dim != alg.dim:
            raise DimensionMismatchError(
                f"product dim {P0.dim} and sampler dim {sampler.dim} must both equal {alg.dim}"
            )

        counts = self.chunk_counts(n_samples)
        seeds = np.random.SeedSequence(seed).spawn(len(counts))

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                partials = list(
                    pool.map(lambda job: _chunk_sum(sampler, P0.gram, job[0], job[1]), zip(counts, seeds))
                )
        else:
            partials = [_chunk_sum(sampler, P0.gram, count, s) for count, s in zip(counts, seeds)]

        total = np.zeros_like(P0.gram)
        for partial in partials:
            total = total + partial
        haar_samples_total.inc(n_samples)

        gram = total / n_samples
        residual = ad_invariance_residual((gram + gram.T) / 2.0, basis_ads(alg))
        logger.info(
            f"Averaged '{P0.label}' over {n_samples} samples on {alg.label}: residual {residual:.3e}"
        )
        return ScalarProduct(
            gram=gram,
            label=f"haar({P0.label})",
            invariance_residual=residual,
            degeneracy_threshold=P0.degeneracy_threshold,
            allow_degenerate=P0.allow_degenerate,
        )


def haar_average(
    alg: LieAlgebra,
    P0: ScalarProduct,
    sampler: HaarSampler,
    n_samples: int,
    seed: int,
    chunk_size: int | None = None,
    workers: int | None = None,
) -> ScalarProduct:
    service = HaarAveragingService(
        chunk_size=chunk_size or settings.haar_chunk_size,
        workers=workers or settings.haar_workers,
    )
    return service.average(alg, P0, sampler, n_samples, seed)


def diagonal_product(values: list[float], label: str | None = None) -> ScalarProduct:
    return ScalarProduct(gram=np.diag(values), label=label or "diag")


def product_from_file(path: str | Path) -> ScalarProduct:
    try:
        schema = ProductFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read product file {path}: {e}") from e
    except ValidationError as e:
        raise UsageError(f"invalid product file {path}: {e}") from e
    return ScalarProduct(gram=np.array(schema.gram), label=schema.label)


def product_from_spec(alg: LieAlgebra, spec: str) -> ScalarProduct:
    """Resolve 'killing', 'euclidean', 'diag:a,b,...' or a JSON file path."""
    spec = spec.strip()
    if spec == "killing":
        return killing_form(alg)
    if spec == "euclidean":
        P = ScalarProduct(gram=np.eye(alg.dim), label="euclidean")
    elif spec.startswith("diag:"):
        try:
            values = [float(x) for x in spec[len("diag:") :].split(",")]
        except ValueError as e:
            raise UsageError(f"cannot parse diagonal product '{spec}'") from e
        P = diagonal_product(values, label=spec)
    else:
        P = product_from_file(spec)
    if P.dim != alg.dim:
        raise DimensionMismatchError(f"product '{P.label}' has dim {P.dim}, algebra {alg.label} has dim {alg.dim}")
    return with_invariance(alg, P)
