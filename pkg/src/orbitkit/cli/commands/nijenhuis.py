"""Nijenhuis sweep over the eigenblock pairs at one element."""

import argparse
from typing import Any

import numpy as np

from orbitkit.cli.parsing import parse_vector, resolve_algebra, resolve_tol
from orbitkit.services.nijenhuis import nijenhuis_sweep
from orbitkit.services.orbit import canonical_J
from orbitkit.services.spectral import decompose


def execute(args: argparse.Namespace) -> dict[str, Any]:
    alg = resolve_algebra(args.algebra)
    w = parse_vector(args.element, alg.dim)
    tol = resolve_tol(args.tol)

    decomp = decompose(alg, w, tol)
    J = canonical_J(decomp)
    worst = nijenhuis_sweep(alg, decomp, J, np.random.default_rng(args.seed), samples=args.samples)
    pairs = len(decomp.blocks) * (len(decomp.blocks) + 1) // 2

    return {
        "inputs": {"algebra": alg.label, "element": w, "tol": tol, "samples": args.samples, "seed": args.seed},
        "payload": {
            "blocks": decomp.summary()["blocks"],
            "block_pairs": pairs,
            "max_nijenhuis_norm": worst,
        },
        "residual_summary": {"max_nijenhuis_norm": worst},
    }
