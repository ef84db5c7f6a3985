"""Immutable domain types."""

from orbitkit.models.algebra import (
    AdjointMatrix,
    AdMatrix,
    DualVector,
    Element,
    LieAlgebra,
    Matrix,
    Vector,
)
from orbitkit.models.orbit import ComplexStructure, MetricGram, OrbitStructureReport, TwoFormMatrix
from orbitkit.models.products import ScalarProduct
from orbitkit.models.spectral import (
    EigenBlock,
    EigenCluster,
    SkewClassification,
    SpectralDecomposition,
    Verdict,
)

__all__ = [
    "AdMatrix",
    "AdjointMatrix",
    "ComplexStructure",
    "DualVector",
    "EigenBlock",
    "EigenCluster",
    "Element",
    "LieAlgebra",
    "Matrix",
    "MetricGram",
    "OrbitStructureReport",
    "ScalarProduct",
    "SkewClassification",
    "SpectralDecomposition",
    "TwoFormMatrix",
    "Vector",
    "Verdict",
]
