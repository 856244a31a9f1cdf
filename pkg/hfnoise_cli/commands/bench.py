"""``bench``: run the Monte Carlo benchmark."""

import argparse

from hfnoise.core.config import get_settings
from hfnoise.modules.benchmark import BenchmarkRunner, write_report
from hfnoise.modules.benchmark.schemas import BenchmarkConfig
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

EXIT_FAILURE_RATE = 3


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="Run the simulation benchmark")
    parser.add_argument("--models", nargs="+", choices=["i", "ii"], default=["i"])
    parser.add_argument(
        "--noise", nargs="+", choices=["normal", "scaled_t8"], default=["normal"]
    )
    parser.add_argument("--sigma-u", nargs="+", type=float, default=[0.005])
    parser.add_argument("--delta-s", nargs="+", type=int, default=[30])
    parser.add_argument("--replications", type=int, default=10)
    parser.add_argument("--kernel", choices=["sinc", "gaussian"], default="sinc")
    parser.add_argument(
        "--estimators",
        nargs="+",
        choices=["density", "moments", "ivol"],
        default=["density", "moments", "ivol"],
    )
    parser.add_argument("--jitter", type=float, default=0.0)
    parser.add_argument("--substeps", type=int, default=10)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = BenchmarkConfig(
        models=args.models,
        noise_families=args.noise,
        sigma_u_values=args.sigma_u,
        delta_s_values=args.delta_s,
        replications=args.replications,
        master_seed=args.seed,
        kernel=args.kernel,
        estimators=args.estimators,
        jitter=args.jitter,
        workers=args.workers,
        substeps=args.substeps,
    )
    report = BenchmarkRunner(config).run()
    if args.out:
        write_report(report, args.out)
    else:
        print(report.model_dump_json(indent=2))

    threshold = get_settings().max_failure_rate
    if report.failure_rate > threshold:
        logger.error(f"failure rate {report.failure_rate:.3f} exceeds {threshold}")
        return EXIT_FAILURE_RATE
    return 0
