"""Tests for deterministic JSON output."""

import json

import numpy as np
import pytest
from pydantic import BaseModel

from orbitkit.utils.serialization import dumps


class Sample(BaseModel):
    name: str
    value: float


def test_floats_use_seventeen_significant_digits():
    assert dumps(0.1) == "0.10000000000000001"
    assert dumps(1.0) == "1"
    assert float(dumps(1 / 3)) == 1 / 3


def test_negative_zero_and_non_finite_values():
    assert dumps(-0.0) == "0"
    assert dumps([float("nan"), float("inf")], indent=None) == "[null, null]"


def test_numpy_values():
    assert dumps(np.float64(2.5)) == "2.5"
    assert dumps(np.int64(7)) == "7"
    assert dumps(np.bool_(True)) == "true"
    assert json.loads(dumps(np.eye(2))) == [[1, 0], [0, 1]]


def test_complex_numbers_become_pairs():
    assert json.loads(dumps(1 - 2j)) == [1, -2]


def test_models_and_nested_mappings():
    text = dumps({"sample": Sample(name="a", value=0.5), "flags": (True, None)})
    assert json.loads(text) == {"sample": {"name": "a", "value": 0.5}, "flags": [True, None]}


def test_output_is_byte_stable(rng):
    payload = {"matrix": rng.standard_normal((3, 3)), "label": "su2"}
    assert dumps(payload) == dumps(payload)
    assert dumps(payload).encode() == dumps(json.loads(dumps(payload))).encode()


def test_digits_can_be_reduced():
    assert dumps(1 / 3, digits=3) == "0.333"


def test_unsupported_types():
    with pytest.raises(TypeError):
        dumps({1, 2})
