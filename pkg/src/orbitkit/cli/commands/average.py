"""Haar averaging of a scalar product."""

import argparse
from typing import Any

from orbitkit.cli.parsing import resolve_algebra
from orbitkit.config import settings
from orbitkit.schemas import ScalarProductPayload
from orbitkit.services.haar import sampler_for
from orbitkit.services.products import HaarAveragingService, invariance_residual, product_from_spec


def execute(args: argparse.Namespace) -> dict[str, Any]:
    alg = resolve_algebra(args.algebra)
    sampler = sampler_for(alg)
    P0 = product_from_spec(alg, args.product)

    service = HaarAveragingService(workers=args.workers or settings.haar_workers)
    averaged = service.average(alg, P0, sampler, args.samples, args.seed)
    return {
        "inputs": {
            "algebra": alg.label,
            "product": P0.label,
            "samples": args.samples,
            "seed": args.seed,
        },
        "payload": {
            "input": ScalarProductPayload.from_product(P0).model_dump(),
            "averaged": ScalarProductPayload.from_product(averaged).model_dump(),
        },
        "residual_summary": {
            "input_invariance_residual": invariance_residual(alg, P0),
            "invariance_residual": averaged.invariance_residual,
        },
    }
