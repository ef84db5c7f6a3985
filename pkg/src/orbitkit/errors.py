"""Exception hierarchy for orbitkit."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from orbitkit.models.spectral import SkewClassification


class OrbitKitError(Exception):
    """Base class for every error raised by orbitkit."""


class InvalidAlgebraError(OrbitKitError, ValueError):
    pass


class DimensionMismatchError(OrbitKitError, ValueError):
    pass


class UnknownAlgebraError(OrbitKitError, ValueError):
    pass


class AlgebraFileError(OrbitKitError, ValueError):
    pass


class UsageError(OrbitKitError, ValueError):
    pass


class EigensolverError(OrbitKitError):
    pass


class NotSkewSymmetricError(OrbitKitError, ValueError):
    def __init__(self, classification: SkewClassification) -> None:
        self.classification = classification
        super().__init__(f"element is not skew-symmetric: {classification.describe()}")


class DegenerateProductError(OrbitKitError, ValueError):
    pass


class NonSymmetricProductError(OrbitKitError, ValueError):
    pass


class NoSamplerAvailableError(OrbitKitError, ValueError):
    pass


class NonEquivariantMapError(OrbitKitError, ValueError):
    def __init__(self, residual: float, tol: float) -> None:
        self.residual = residual
        self.tol = tol
        super().__init__(f"equivariance residual {residual:.3e} exceeds tolerance {tol:.3e}")


class MissingLinearizationError(OrbitKitError, ValueError):
    pass


class DegenerateFormError(OrbitKitError, ValueError):
    pass


class TrivialOrbitError(DegenerateFormError):
    pass


class BasisMismatchError(OrbitKitError, ValueError):
    pass


class BlockMembershipError(OrbitKitError, ValueError):
    pass


class ImageEscapeError(OrbitKitError):
    pass
