"""Ad-equivariant maps s: g -> g used to build transgression forms."""

from abc import ABC, abstractmethod
from collections.abc import Callable

import numpy as np

from orbitkit.config import settings
from orbitkit.errors import DimensionMismatchError, MissingLinearizationError, UsageError
from orbitkit.models import Element, LieAlgebra, Matrix, ScalarProduct
from orbitkit.services.lie import bracket


class EquivariantMap(ABC):
    kind: str = "abstract"

    @property
    def label(self) -> str:
        return self.kind

    @property
    def tolerance(self) -> float:
        """Equivariance residual accepted before omega_s refuses the map."""
        return settings.tol

    @abstractmethod
    def __call__(self, w: Element) -> Element:
        pass

    @abstractmethod
    def differential(self, w: Element, y: Element) -> Element:
        """ds_w(y)."""

    def linearization(self, w: Element) -> Matrix:
        """Exact matrix of ds_w; only maps with a closed-form derivative provide one."""
        raise MissingLinearizationError(f"map '{self.label}' has no exact linearization")

    def differential_matrix(self, w: Element) -> Matrix:
        n = w.shape[0]
        return np.column_stack([self.differential(w, e) for e in np.eye(n)])

    def equivariance_residual(self, alg: LieAlgebra, w: Element) -> float:
        """max over basis u of || ds_w([u, w]) - [u, s(w)] ||, relative to 1 + ||w||."""
        w = alg.element(w)
        sw = self(w)
        worst = 0.0
        for i in range(alg.dim):
            u = alg.basis_vector(i)
            defect = self.differential(w, bracket(alg, u, w)) - bracket(alg, u, sw)
            worst = max(worst, float(np.linalg.norm(defect)))
        return worst / (1.0 + float(np.linalg.norm(w)))


class IdentityMap(EquivariantMap):
    kind = "identity"

    def __call__(self, w: Element) -> Element:
        return np.asarray(w, dtype=np.float64)

    def differential(self, w: Element, y: Element) -> Element:
        return np.asarray(y, dtype=np.float64)

    def linearization(self, w: Element) -> Matrix:
        return np.eye(w.shape[0])

    def equivariance_residual(self, alg: LieAlgebra, w: Element) -> float:
        return 0.0


class ScaledMap(EquivariantMap):
    kind = "scale"

    def __init__(self, c: float) -> None:
        self.c = float(c)

    @property
    def label(self) -> str:
        return f"scale:{self.c:g}"

    def __call__(self, w: Element) -> Element:
        return self.c * np.asarray(w, dtype=np.float64)

    def differential(self, w: Element, y: Element) -> Element:
        return self.c * np.asarray(y, dtype=np.float64)

    def linearization(self, w: Element) -> Matrix:
        return self.c * np.eye(w.shape[0])

    def equivariance_residual(self, alg: LieAlgebra, w: Element) -> float:
        return 0.0


class LinearMap(EquivariantMap):
    """s(w) = S w; equivariant iff S commutes with every ad_v."""

    kind = "linear"

    def __init__(self, matrix: Matrix, label: str | None = None) -> None:
        s = np.array(matrix, dtype=np.float64, copy=True)
        if s.ndim != 2 or s.shape[0] != s.shape[1]:
            raise DimensionMismatchError(f"linear map must be square, got shape {s.shape}")
        s.setflags(write=False)
        self.matrix = s
        self._label = label

    @classmethod
    def from_products(cls, P: ScalarProduct, P_prime: ScalarProduct) -> "LinearMap":
        """s = # o b' : the KKS form of P' pulled back through P, S = G^-1 G'."""
        if P.dim != P_prime.dim:
            raise DimensionMismatchError("products must share a dimension")
        return cls(np.linalg.solve(P.gram, P_prime.gram), label=f"products({P_prime.label}/{P.label})")

    @property
    def label(self) -> str:
        return self._label or "linear"

    def __call__(self, w: Element) -> Element:
        return self.matrix @ w

    def differential(self, w: Element, y: Element) -> Element:
        return self.matrix @ y

    def linearization(self, w: Element) -> Matrix:
        return self.matrix.copy()


class BlackBoxMap(EquivariantMap):
    """Arbitrary callback; ds_w by central differences, step fd_step * (1 + ||w||)."""

    kind = "blackbox"

    def __init__(
        self,
        callback: Callable[[Element], Element],
        fd_step: float | None = None,
        label: str | None = None,
    ) -> None:
        self.callback = callback
        self.fd_step = settings.fd_step_map if fd_step is None else fd_step
        self._label = label

    @property
    def label(self) -> str:
        return self._label or "blackbox"

    @property
    def tolerance(self) -> float:
        return settings.fd_tol

    def __call__(self, w: Element) -> Element:
        return np.asarray(self.callback(np.asarray(w, dtype=np.float64)), dtype=np.float64)

    def differential(self, w: Element, y: Element) -> Element:
        h = self.fd_step * (1.0 + float(np.linalg.norm(w)))
        return (self(w + h * y) - self(w - h * y)) / (2.0 * h)


def map_from_spec(spec: str) -> EquivariantMap:
    """'identity' or 'scale:c'."""
    spec = spec.strip()
    if spec == "identity":
        return IdentityMap()
    if spec.startswith("scale:"):
        try:
            return ScaledMap(float(spec[len("scale:") :]))
        except ValueError as e:
            raise UsageError(f"cannot parse scale factor in '{spec}'") from e
    raise UsageError(f"unknown map '{spec}'; expected 'identity' or 'scale:<c>'")
