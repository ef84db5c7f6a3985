"""Acceptance checks and the suite that runs them."""

from orbitkit.verification.suite import SuiteResult, run_acceptance_suite

__all__ = ["SuiteResult", "run_acceptance_suite"]
