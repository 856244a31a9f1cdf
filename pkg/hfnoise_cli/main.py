"""Entry point of the ``hfnoise`` command.

Exit codes: 0 on success, 2 for invalid input, 3 when an estimator fails
or a benchmark exceeds the allowed failure rate.
"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from hfnoise.core.config import get_settings
from hfnoise.core.exceptions import EstimationError, InvalidInputError
from hfnoise.utils.logger import Logger
from hfnoise_cli.commands import bench, estimate, ingest, simulate

logger = Logger().get_logger()

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_ESTIMATION = 3


def seed_type(value: str) -> int:
    seed = int(value)
    if seed < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {seed}")
    return seed


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="hfnoise",
        description="Noise density, moments and integrated volatility from noisy "
        "high-frequency observations.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "--seed", type=seed_type, default=settings.seed, help="Master seed"
    )
    parser.add_argument("--out", default=None, help="Output file (directory for bench)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--workers", type=int, default=settings.workers)

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (simulate, estimate, ingest, bench):
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return int(args.handler(args))
    except (InvalidInputError, ValidationError, FileNotFoundError) as exc:
        logger.error(f"{args.command}: invalid input: {exc}")
        return EXIT_INVALID
    except EstimationError as exc:
        logger.error(f"{args.command}: estimation failed: {exc}")
        return EXIT_ESTIMATION


if __name__ == "__main__":
    sys.exit(main())
