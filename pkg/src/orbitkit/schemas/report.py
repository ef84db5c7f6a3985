"""Output schemas for CLI reports."""

from typing import Any

import numpy as np
from pydantic import BaseModel

from orbitkit.models import OrbitStructureReport, ScalarProduct, SkewClassification


def _matrix(m: np.ndarray | None) -> list[list[float]] | None:
    return None if m is None else [[float(x) for x in row] for row in m]


def _complex(z: complex) -> tuple[float, float]:
    return (float(z.real), float(z.imag))


class ClusterPayload(BaseModel):
    value: tuple[float, float]
    algebraic_multiplicity: int
    geometric_multiplicity: int


class ClassificationPayload(BaseModel):
    verdict: str
    eigenvalues: list[tuple[float, float]]
    clusters: list[ClusterPayload]
    offending_eigenvalue: tuple[float, float] | None = None
    tol: float

    @classmethod
    def from_classification(cls, c: SkewClassification) -> "ClassificationPayload":
        return cls(
            verdict=c.verdict.value,
            eigenvalues=[_complex(z) for z in c.eigenvalues],
            clusters=[
                ClusterPayload(
                    value=_complex(cluster.value),
                    algebraic_multiplicity=cluster.algebraic_multiplicity,
                    geometric_multiplicity=cluster.geometric_multiplicity,
                )
                for cluster in c.clusters
            ],
            offending_eigenvalue=None if c.offending_eigenvalue is None else _complex(c.offending_eigenvalue),
            tol=c.tol,
        )


class ScalarProductPayload(BaseModel):
    label: str
    gram: list[list[float]]
    invariance_residual: float | None = None
    degenerate: bool

    @classmethod
    def from_product(cls, P: ScalarProduct) -> "ScalarProductPayload":
        return cls(
            label=P.label,
            gram=_matrix(P.gram) or [],
            invariance_residual=P.invariance_residual,
            degenerate=P.degenerate,
        )


class BlockPayload(BaseModel):
    mu: float
    dim: int


class OrbitReportPayload(BaseModel):
    algebra: str
    basepoint: list[float]
    product: str
    map: str
    tol: float
    classification: ClassificationPayload | None = None
    kernel_dim: int | None = None
    blocks: list[BlockPayload] = []
    J: list[list[float]] | None = None
    omega: list[list[float]] | None = None
    g: list[list[float]] | None = None
    signature: tuple[int, int, int] | None = None
    residuals: dict[str, float] = {}
    is_kaehler: bool
    errors: list[str] = []
    warnings: list[str] = []

    @classmethod
    def from_report(cls, report: OrbitStructureReport) -> "OrbitReportPayload":
        decomp = report.decomposition
        return cls(
            algebra=report.algebra,
            basepoint=[float(x) for x in report.basepoint],
            product=report.product_label,
            map=report.map_label,
            tol=report.tol,
            classification=(
                None
                if report.classification is None
                else ClassificationPayload.from_classification(report.classification)
            ),
            kernel_dim=None if decomp is None else decomp.kernel_dim,
            blocks=[] if decomp is None else [BlockPayload(mu=b.mu, dim=b.dim) for b in decomp.blocks],
            J=None if report.complex_structure is None else _matrix(report.complex_structure.matrix),
            omega=None if report.two_form is None else _matrix(report.two_form.matrix),
            g=None if report.metric is None else _matrix(report.metric.matrix),
            signature=report.signature,
            residuals=dict(report.residuals),
            is_kaehler=report.is_kaehler,
            errors=list(report.errors),
            warnings=list(report.warnings),
        )


class CriterionResult(BaseModel):
    id: int
    name: str
    passed: bool
    worst_residual: float
    detail: dict[str, Any] = {}


class ReportEnvelope(BaseModel):
    tool_version: str
    command: str
    inputs: dict[str, Any]
    payload: dict[str, Any]
    residual_summary: dict[str, Any] = {}
