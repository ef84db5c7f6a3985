"""Pydantic schemas for files and reports."""

from orbitkit.schemas.algebra import AlgebraFile
from orbitkit.schemas.product import ProductFile
from orbitkit.schemas.report import (
    ClassificationPayload,
    CriterionResult,
    OrbitReportPayload,
    ReportEnvelope,
    ScalarProductPayload,
)

__all__ = [
    "AlgebraFile",
    "ClassificationPayload",
    "CriterionResult",
    "OrbitReportPayload",
    "ProductFile",
    "ReportEnvelope",
    "ScalarProductPayload",
]
