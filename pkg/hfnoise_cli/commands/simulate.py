"""``simulate``: noisy observations of a Heston path."""

import argparse

import pandas as pd

from hfnoise.core.seeding import child_seed
from hfnoise.modules.simulation import (
    generate_noise,
    make_observations,
    make_time_grid,
    rescale_model,
    simulate_heston,
)
from hfnoise.modules.simulation.schemas import HestonParams, NoiseSpec
from hfnoise.utils.logger import Logger
from hfnoise_cli.commands.common import emit_frame

logger = Logger().get_logger()


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Simulate one noisy trading day")
    parser.add_argument("--model", choices=["i", "ii"], default="i")
    parser.add_argument("--noise", choices=["normal", "scaled_t8"], default="normal")
    parser.add_argument("--sigma-u", type=float, default=0.005)
    parser.add_argument("--delta-s", type=int, default=30)
    parser.add_argument("--jitter", type=float, default=0.0)
    parser.add_argument("--substeps", type=int, default=10)
    parser.add_argument("--scale", type=float, default=1.0, help="Rescaling factor c")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    params = HestonParams.named(args.model)
    spec = NoiseSpec(family=args.noise, sigma_u=args.sigma_u)
    if args.scale != 1.0:
        params, spec = rescale_model(params, spec, args.scale)
    grid = make_time_grid(
        args.delta_s, jitter=args.jitter, seed=child_seed(args.seed, 0)
    )
    path = simulate_heston(
        params, grid, substeps=args.substeps, seed=child_seed(args.seed, 1)
    )
    noise = generate_noise(spec, len(grid), seed=child_seed(args.seed, 2))
    series = make_observations(path, noise)
    logger.info(
        f"Simulated {len(series)} observations, "
        f"integrated variance {path.integrated_vol:.6g}"
    )
    emit_frame(args, pd.DataFrame({"time": series.times, "value": series.y}))
    return 0
