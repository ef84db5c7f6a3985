"""Acceptance suite over the catalog."""

import time
from collections.abc import Callable
from typing import Any

import numpy as np
from pydantic import BaseModel

from orbitkit.schemas import CriterionResult
from orbitkit.utils.logging import get_logger
from orbitkit.utils.metrics import check_duration_seconds, checks_total
from orbitkit.verification.checks import (
    check_algebra_validity,
    check_classification,
    check_complex_structure,
    check_determinism,
    check_haar_average,
    check_nijenhuis,
    check_poisson,
    check_semi_kaehler,
    check_spectral,
    check_transgression,
)

logger = get_logger(__name__)


class SuiteResult(BaseModel):
    seed: int
    passed: bool
    criteria: list[CriterionResult]


def _seeded(check: Callable[[np.random.Generator], CriterionResult], criterion: int) -> Callable[[int], CriterionResult]:
    return lambda seed: check(np.random.default_rng([seed, criterion]))


CRITERIA: tuple[tuple[int, Callable[[int], CriterionResult]], ...] = (
    (1, _seeded(check_algebra_validity, 1)),
    (2, _seeded(check_classification, 2)),
    (3, _seeded(check_spectral, 3)),
    (4, _seeded(check_complex_structure, 4)),
    (5, _seeded(check_semi_kaehler, 5)),
    (6, _seeded(check_transgression, 6)),
    (7, _seeded(check_nijenhuis, 7)),
    (8, _seeded(check_poisson, 8)),
    (9, check_haar_average),
    (10, check_determinism),
)


def run_acceptance_suite(seed: int, only: set[int] | None = None) -> SuiteResult:
    stats: dict[str, Any] = {
        "criteria_passed": 0,
        "criteria_failed": 0,
        "checks_errored": 0,
    }
    results: list[CriterionResult] = []

    for criterion, run in CRITERIA:
        if only is not None and criterion not in only:
            continue
        started = time.perf_counter()
        try:
            result = run(seed)
        except Exception as e:
            logger.error("criterion_errored", criterion=criterion, error=str(e))
            stats["checks_errored"] += 1
            result = CriterionResult(
                id=criterion,
                name=f"criterion {criterion}",
                passed=False,
                worst_residual=float("nan"),
                detail={"error": f"{type(e).__name__}: {e}"},
            )
        elapsed = time.perf_counter() - started

        outcome = "pass" if result.passed else "fail"
        checks_total.labels(criterion=str(criterion), outcome=outcome).inc()
        check_duration_seconds.labels(criterion=str(criterion)).observe(elapsed)
        stats["criteria_passed" if result.passed else "criteria_failed"] += 1
        logger.info(
            "criterion_evaluated",
            criterion=criterion,
            name=result.name,
            passed=result.passed,
            worst_residual=result.worst_residual,
            seconds=round(elapsed, 3),
        )
        results.append(result)

    logger.info("acceptance_suite_completed", seed=seed, **stats)
    return SuiteResult(seed=seed, passed=all(r.passed for r in results), criteria=results)
