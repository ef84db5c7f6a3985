"""Argument parsing helpers shared by the subcommands."""

from pathlib import Path

import numpy as np

from orbitkit.config import Settings
from orbitkit.errors import DimensionMismatchError, UsageError
from orbitkit.models import LieAlgebra, Vector
from orbitkit.services.algebra_io import load_algebra
from orbitkit.services.catalog import catalog_load


def resolve_algebra(spec: str) -> LieAlgebra:
    """A catalog name, or the path of an algebra JSON file."""
    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        return load_algebra(path)
    return catalog_load(spec)


def parse_vector(text: str, dim: int, what: str = "element") -> Vector:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError as e:
        raise UsageError(f"cannot parse {what} '{text}' as comma-separated reals") from e
    if len(values) != dim:
        raise DimensionMismatchError(f"{what} has {len(values)} coordinates, algebra has dim {dim}")
    return np.array(values)


def resolve_tol(tol: float | None) -> float:
    """--tol wins; otherwise ORBITKIT_TOL or the default, read at call time."""
    return tol if tol is not None else Settings().tol
