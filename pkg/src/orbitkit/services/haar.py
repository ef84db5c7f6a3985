"""Haar-distributed samples of Ad(g) for compact catalog algebras."""

from abc import ABC, abstractmethod

import numpy as np
import numpy.typing as npt
from scipy.spatial.transform import Rotation

from orbitkit.errors import NoSamplerAvailableError
from orbitkit.models import LieAlgebra
from orbitkit.services.catalog import su_coordinates, su_matrix_basis


class HaarSampler(ABC):
    """Draws stacks of adjoint matrices Ad(g), g Haar-distributed."""

    def __init__(self, dim: int) -> None:
        self.dim = dim

    @abstractmethod
    def sample(self, count: int, rng: np.random.Generator) -> npt.NDArray[np.float64]:
        """Return an array of shape (count, dim, dim)."""


class UnitarySampler(HaarSampler):
    """U(n) via QR of a complex Ginibre matrix with phase correction.

    The U(1) phase acts trivially by conjugation, so U(n) and SU(n) give the
    same distribution of Ad(g).
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.basis = su_matrix_basis(n)
        super().__init__(self.basis.shape[0])

    def sample_unitaries(self, count: int, rng: np.random.Generator) -> npt.NDArray[np.complex128]:
        shape = (count, self.n, self.n)
        z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
        q, r = np.linalg.qr(z)
        d = np.diagonal(r, axis1=1, axis2=2)
        phases = d / np.abs(d)
        return q * phases[:, np.newaxis, :]

    def sample(self, count: int, rng: np.random.Generator) -> npt.NDArray[np.float64]:
        u = self.sample_unitaries(count, rng)
        # U e_k U^dagger for every sample and basis element
        conjugated = np.einsum("sij,kjl,sml->skim", u, self.basis, u.conj())
        coords = su_coordinates(self.basis, conjugated)
        # coords[s, k, a] is the a-th coordinate of Ad(U) e_k
        return np.transpose(coords, (0, 2, 1))


class RotationSampler(HaarSampler):
    """Uniform SO(3); on so(3) in the L_i basis, Ad(R) is R itself."""

    def __init__(self) -> None:
        super().__init__(3)

    def sample(self, count: int, rng: np.random.Generator) -> npt.NDArray[np.float64]:
        return Rotation.random(count, rng).as_matrix().reshape(count, 3, 3)


class IdentitySampler(HaarSampler):
    """Always returns the identity; used to pin down the averaging arithmetic."""

    def sample(self, count: int, rng: np.random.Generator) -> npt.NDArray[np.float64]:
        return np.broadcast_to(np.eye(self.dim), (count, self.dim, self.dim)).copy()


def sampler_for(alg: LieAlgebra) -> HaarSampler:
    name = (alg.name or "").lower()
    if name == "su2":
        return UnitarySampler(2)
    if name == "su3":
        return UnitarySampler(3)
    if name == "so3":
        return RotationSampler()
    raise NoSamplerAvailableError(
        f"no Haar sampler for '{alg.label}'; averaging needs a compact catalog algebra (su2, so3, su3)"
    )
