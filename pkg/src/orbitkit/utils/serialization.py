"""Deterministic JSON encoding.

Floats are written with a fixed number of significant digits so that identical
inputs always produce identical bytes, independent of the shortest-repr
heuristics of the interpreter.
"""

import json
import math
from collections.abc import Mapping, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel

from orbitkit.config import settings


def _float(value: float, digits: int) -> str:
    if not math.isfinite(value):
        return "null"
    if value == 0.0:
        # normalizes -0.0
        return "0"
    return format(value, f".{digits}g")


def _encode(obj: Any, digits: int, indent: int | None, level: int) -> str:
    if isinstance(obj, BaseModel):
        return _encode(obj.model_dump(mode="python"), digits, indent, level)
    if obj is None or isinstance(obj, bool | np.bool_):
        return "null" if obj is None else ("true" if obj else "false")
    if isinstance(obj, int | np.integer):
        return str(int(obj))
    if isinstance(obj, float | np.floating):
        return _float(float(obj), digits)
    if isinstance(obj, complex | np.complexfloating):
        return _encode([obj.real, obj.imag], digits, indent, level)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, np.ndarray):
        return _encode(obj.tolist(), digits, indent, level)

    if isinstance(obj, Mapping):
        items = [
            f"{json.dumps(str(key), ensure_ascii=False)}: {_encode(value, digits, indent, level + 1)}"
            for key, value in obj.items()
        ]
        return _join(items, "{", "}", indent, level)
    if isinstance(obj, Sequence):
        items = [_encode(value, digits, indent, level + 1) for value in obj]
        return _join(items, "[", "]", indent, level)

    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _join(items: list[str], opener: str, closer: str, indent: int | None, level: int) -> str:
    if not items:
        return opener + closer
    if indent is None:
        return opener + ", ".join(items) + closer
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    return opener + "\n" + ",\n".join(pad + item for item in items) + "\n" + end + closer


def dumps(obj: Any, digits: int | None = None, indent: int | None = 2) -> str:
    return _encode(obj, digits or settings.float_digits, indent, 0)
