"""CLI subcommands."""

from orbitkit.cli.commands import average, classify, nijenhuis, orbit, poisson_check, verify_all

__all__ = ["average", "classify", "nijenhuis", "orbit", "poisson_check", "verify_all"]
