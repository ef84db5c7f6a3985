"""Reading and writing algebra JSON files."""

import json
import logging
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from orbitkit.config import settings
from orbitkit.errors import AlgebraFileError
from orbitkit.models import LieAlgebra
from orbitkit.schemas.algebra import AlgebraFile

logger = logging.getLogger(__name__)


def algebra_from_schema(data: AlgebraFile, check_jacobi: bool = True) -> LieAlgebra:
    c = np.zeros((data.dim, data.dim, data.dim))
    for i, j, k, value in data.c:
        c[i, j, k] = value
        c[j, i, k] = -value
    return LieAlgebra(
        structure_constants=c,
        basis_labels=tuple(data.basis),
        name=data.name,
        jacobi_tol=settings.jacobi_tol,
        check_jacobi=check_jacobi,
    )


def algebra_to_schema(alg: LieAlgebra) -> AlgebraFile:
    c = alg.structure_constants
    entries = [
        (i, j, k, float(c[i, j, k]))
        for i in range(alg.dim)
        for j in range(i + 1, alg.dim)
        for k in range(alg.dim)
        if c[i, j, k] != 0.0
    ]
    return AlgebraFile(name=alg.label, dim=alg.dim, basis=list(alg.basis_labels), c=entries)


def loads_algebra(text: str, check_jacobi: bool = True) -> LieAlgebra:
    try:
        data = AlgebraFile.model_validate_json(text)
    except ValidationError as e:
        raise AlgebraFileError(f"invalid algebra file: {e}") from e
    return algebra_from_schema(data, check_jacobi=check_jacobi)


def dumps_algebra(alg: LieAlgebra) -> str:
    # json.dumps writes floats with repr, which round-trips bit-exactly
    return json.dumps(algebra_to_schema(alg).model_dump(), indent=2)


def load_algebra(path: str | Path, check_jacobi: bool = True) -> LieAlgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"cannot read algebra file {path}: {e}") from e
    alg = loads_algebra(text, check_jacobi=check_jacobi)
    logger.info(f"Loaded algebra {alg.label} (dim {alg.dim}) from {path}")
    return alg


def dump_algebra(alg: LieAlgebra, path: str | Path) -> None:
    Path(path).write_text(dumps_algebra(alg) + "\n", encoding="utf-8")
