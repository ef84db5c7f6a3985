"""Acceptance suite over the catalog."""

import argparse
import logging
from typing import Any

from orbitkit.utils.metrics import write_metrics
from orbitkit.verification import run_acceptance_suite

logger = logging.getLogger(__name__)


def execute(args: argparse.Namespace) -> dict[str, Any]:
    only = set(args.only) if args.only else None
    result = run_acceptance_suite(args.seed, only=only)

    if args.metrics_file:
        write_metrics(args.metrics_file)
        logger.info(f"Wrote metrics to {args.metrics_file}")

    failed = [c.id for c in result.criteria if not c.passed]
    return {
        "inputs": {"seed": args.seed, "only": sorted(only) if only else None},
        "payload": result.model_dump(),
        "residual_summary": {"passed": result.passed, "failed_criteria": failed},
        "passed": result.passed,
    }
