"""Skew-symmetry classification of a single element."""

import argparse
import logging
from typing import Any

from orbitkit.cli.parsing import parse_vector, resolve_algebra, resolve_tol
from orbitkit.schemas import ClassificationPayload
from orbitkit.services.spectral import classify_skew

logger = logging.getLogger(__name__)


def execute(args: argparse.Namespace) -> dict[str, Any]:
    alg = resolve_algebra(args.algebra)
    w = parse_vector(args.element, alg.dim)
    tol = resolve_tol(args.tol)

    classification = classify_skew(alg, w, tol)
    logger.info(f"Classified element of {alg.label}: {classification.describe()}")

    return {
        "inputs": {"algebra": alg.label, "element": w, "tol": tol},
        "payload": ClassificationPayload.from_classification(classification).model_dump(),
        "residual_summary": {
            "max_abs_real_part": max((abs(z.real) for z in classification.eigenvalues), default=0.0),
        },
    }
