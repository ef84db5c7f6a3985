"""orbitkit command-line entry point."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any, NoReturn

from orbitkit import __version__
from orbitkit.cli import pretty
from orbitkit.cli.commands import average, classify, nijenhuis, orbit, poisson_check, verify_all
from orbitkit.config import settings
from orbitkit.errors import (
    AlgebraFileError,
    DimensionMismatchError,
    InvalidAlgebraError,
    NoSamplerAvailableError,
    OrbitKitError,
    UnknownAlgebraError,
    UsageError,
)
from orbitkit.schemas import ReportEnvelope
from orbitkit.utils.logging import setup_logging
from orbitkit.utils.serialization import dumps

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

INPUT_ERRORS = (
    UsageError,
    InvalidAlgebraError,
    DimensionMismatchError,
    UnknownAlgebraError,
    AlgebraFileError,
    NoSamplerAvailableError,
)

COMMANDS: dict[str, Callable[[argparse.Namespace], dict[str, Any]]] = {
    "classify": classify.execute,
    "orbit": orbit.execute,
    "nijenhuis": nijenhuis.execute,
    "average": average.execute,
    "poisson-check": poisson_check.execute,
    "verify-all": verify_all.execute,
}


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="orbitkit",
        description="Semi-Kaehler structures on (co)adjoint orbits of real Lie algebras.",
    )
    parser.add_argument("--version", action="version", version=f"orbitkit {__version__}")
    parser.add_argument("--pretty", action="store_true", help="also print human-readable tables to stderr")
    parser.add_argument("--log-level", default=None, help="logging level (default: ORBITKIT_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    def algebra_args(p: argparse.ArgumentParser, compact: bool = False) -> None:
        help_text = "su2, so3 or su3" if compact else "catalog name or algebra JSON file"
        p.add_argument("--algebra", required=True, help=help_text)

    def tol_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tol", type=float, default=None, help="tolerance (default: ORBITKIT_TOL or 1e-9)")

    def sampling_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--samples", type=int, default=settings.default_samples)
        p.add_argument("--seed", type=int, default=settings.default_seed)

    p = sub.add_parser("classify", help="classify an element as skew-symmetric or not")
    algebra_args(p)
    p.add_argument("--element", required=True, help="comma-separated coordinates")
    tol_arg(p)

    p = sub.add_parser("orbit", help="complex structure, forms and metric at an element")
    algebra_args(p)
    p.add_argument("--element", required=True)
    p.add_argument("--product", default="killing", help="killing, euclidean, diag:a,b,... or a JSON file")
    p.add_argument("--s", default="identity", help="identity or scale:c")
    tol_arg(p)
    sampling_args(p)

    p = sub.add_parser("nijenhuis", help="orbit Nijenhuis tensor over all block pairs")
    algebra_args(p)
    p.add_argument("--element", required=True)
    tol_arg(p)
    sampling_args(p)

    p = sub.add_parser("average", help="Haar average of a scalar product")
    algebra_args(p, compact=True)
    p.add_argument("--product", required=True, help="diag:a,b,... or a JSON file")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=settings.default_seed)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("poisson-check", help="Lie-Poisson residuals at a covector")
    algebra_args(p)
    p.add_argument("--alpha", required=True, help="comma-separated dual coordinates")
    tol_arg(p)
    sampling_args(p)

    p = sub.add_parser("verify-all", help="run the acceptance suite over the catalog")
    p.add_argument("--seed", type=int, default=settings.default_seed)
    p.add_argument("--metrics-file", default=None, help="write Prometheus text metrics here")
    p.add_argument("--only", type=int, nargs="*", default=None, help="criterion ids to run")

    return parser


def _fail(error: Exception, code: int) -> int:
    sys.stderr.write(dumps({"error": type(error).__name__, "message": str(error)}, indent=None) + "\n")
    return code


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return _fail(e, EXIT_USAGE)

    setup_logging(args.log_level or settings.log_level)

    try:
        result = COMMANDS[args.command](args)
    except INPUT_ERRORS as e:
        return _fail(e, EXIT_USAGE)
    except OrbitKitError as e:
        return _fail(e, EXIT_FAILED)
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}")
        return _fail(e, EXIT_FAILED)

    envelope = ReportEnvelope(
        tool_version=__version__,
        command=args.command,
        inputs=result["inputs"],
        payload=result["payload"],
        residual_summary=result.get("residual_summary", {}),
    )
    sys.stdout.write(dumps(envelope) + "\n")
    if args.pretty:
        sys.stderr.write(pretty.render(args.command, result) + "\n")

    return EXIT_OK if result.get("passed", True) else EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
