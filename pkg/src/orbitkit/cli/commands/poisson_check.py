"""Lie-Poisson checks at one covector."""

import argparse
from typing import Any

import numpy as np

from orbitkit.cli.parsing import parse_vector, resolve_algebra, resolve_tol
from orbitkit.services.poisson import (
    LinearFunction,
    jacobi_poisson_residual,
    kks,
    leaf_dimension,
    leaf_tangent_residual,
    lie_poisson,
)


def execute(args: argparse.Namespace) -> dict[str, Any]:
    alg = resolve_algebra(args.algebra)
    alpha = parse_vector(args.alpha, alg.dim, what="alpha")
    tol = resolve_tol(args.tol)
    rng = np.random.default_rng(args.seed)

    jacobi = antisymmetry = consistency = 0.0
    for _ in range(args.samples):
        v, w, q = rng.standard_normal((3, alg.dim))
        F, G = LinearFunction(v), LinearFunction(w)
        jacobi = max(jacobi, jacobi_poisson_residual(alg, v, w, q, alpha))
        antisymmetry = max(antisymmetry, abs(lie_poisson(alg, F, G, alpha) + lie_poisson(alg, G, F, alpha)))
        consistency = max(consistency, abs(kks(alg, alpha, v, w) - lie_poisson(alg, F, G, alpha)))

    residuals = {
        "jacobi": jacobi,
        "antisymmetry": antisymmetry,
        "kks_consistency": consistency,
        "leaf_tangent": leaf_tangent_residual(alg, alpha, tol),
    }
    return {
        "inputs": {"algebra": alg.label, "alpha": alpha, "tol": tol, "samples": args.samples, "seed": args.seed},
        "payload": {"leaf_dimension": leaf_dimension(alg, alpha, tol), "residuals": residuals},
        "residual_summary": {"max_residual": max(residuals.values())},
    }
