"""Full orbit structure report at one element."""

import argparse
from typing import Any

from orbitkit.cli.parsing import parse_vector, resolve_algebra, resolve_tol
from orbitkit.schemas import OrbitReportPayload
from orbitkit.services.equivariant import map_from_spec
from orbitkit.services.orbit import orbit_report
from orbitkit.services.products import product_from_spec


def execute(args: argparse.Namespace) -> dict[str, Any]:
    alg = resolve_algebra(args.algebra)
    w = parse_vector(args.element, alg.dim)
    tol = resolve_tol(args.tol)
    P = product_from_spec(alg, args.product)
    s = map_from_spec(args.s)

    report = orbit_report(alg, P, s, w, tol=tol, samples=args.samples, seed=args.seed)
    return {
        "inputs": {
            "algebra": alg.label,
            "element": w,
            "product": P.label,
            "s": s.label,
            "tol": tol,
            "samples": args.samples,
            "seed": args.seed,
        },
        "payload": OrbitReportPayload.from_report(report).model_dump(),
        "residual_summary": {
            "max_residual": report.max_residual,
            "is_kaehler": report.is_kaehler,
            "errors": len(report.errors),
        },
    }
