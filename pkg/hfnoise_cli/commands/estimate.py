"""Estimation subcommands: ``density``, ``moments``, ``ivol`` and ``bandwidth``."""

import argparse

import pandas as pd

from hfnoise.modules.bandwidth import select_h_xi
from hfnoise.modules.bandwidth.schemas import BandwidthConfig
from hfnoise.modules.density import default_x_grid, estimate_density
from hfnoise.modules.density.schemas import KernelSpec
from hfnoise.modules.moments import estimate_moments
from hfnoise.modules.volatility import estimate_iv
from hfnoise.records import BandwidthRecord, MomentRecord, VolatilityRecord
from hfnoise.utils.logger import Logger
from hfnoise.utils.series_io import SeriesIO
from hfnoise_cli.commands.common import emit_frame, emit_records, load_series

logger = Logger().get_logger()


def register(subparsers) -> None:
    density = subparsers.add_parser("density", help="Estimate the error density")
    density.add_argument("--input", required=True, help="Series CSV (time,value)")
    density.add_argument(
        "--kernel",
        choices=["sinc", "gaussian"],
        default=None,
        help="Defaults to sinc, or gaussian with --tied",
    )
    density.add_argument(
        "--h", type=float, default=None, help="Bandwidth; selected if absent"
    )
    density.add_argument(
        "--xi", type=float, default=None, help="Window; selected if absent"
    )
    density.add_argument(
        "--tied", action="store_true", help="Data hold tied differences"
    )
    density.add_argument("--x-points", type=int, default=512)
    density.add_argument("--no-truncate", action="store_true")
    density.set_defaults(handler=run_density)

    moments = subparsers.add_parser("moments", help="Estimate even noise moments")
    moments.add_argument("--input", required=True)
    moments.add_argument("--xi", type=float, default=None, help="Defaults to t_1 - t_0")
    moments.add_argument("--kmax", type=int, default=2)
    moments.set_defaults(handler=run_moments)

    ivol = subparsers.add_parser("ivol", help="Estimate integrated volatility")
    ivol.add_argument("--input", required=True)
    ivol.add_argument("--xi", type=float, default=None, help="Defaults to t_1 - t_0")
    ivol.add_argument("--m", type=int, default=50)
    ivol.add_argument("--threshold", type=float, default=0.99)
    ivol.set_defaults(handler=run_ivol)

    bandwidth = subparsers.add_parser("bandwidth", help="Select bandwidth and window")
    bandwidth.add_argument("--input", required=True)
    bandwidth.add_argument("--kernel", choices=["sinc", "gaussian"], default="sinc")
    bandwidth.add_argument("--tied", action="store_true")
    bandwidth.add_argument("--surface-out", default=None, help="CSV of the ISE surface")
    bandwidth.set_defaults(handler=run_bandwidth)


def run_density(args: argparse.Namespace) -> int:
    series = load_series(args.input)
    family = args.kernel or ("gaussian" if args.tied else "sinc")
    h, xi = args.h, args.xi
    if h is None or xi is None:
        selection = select_h_xi(
            series, BandwidthConfig(kernel=family, seed=args.seed, break_ties=args.tied)
        )
        h = h if h is not None else selection.h_hat
        xi = xi if xi is not None else selection.xi_hat
    estimate = estimate_density(
        series,
        KernelSpec(family=family, h=h),
        xi,
        x_grid=default_x_grid(series, n_points=args.x_points),
        truncate=not args.no_truncate,
    )
    logger.info(f"Density estimated with kernel={family} h={h:.4g} xi={xi:.4g}")
    emit_frame(args, pd.DataFrame({"x": estimate.x_grid, "fhat": estimate.values}))
    return 0


def run_moments(args: argparse.Namespace) -> int:
    moments = estimate_moments(load_series(args.input), xi=args.xi, kmax=args.kmax)
    records = [
        MomentRecord(xi=moments.xi, k=k, m_tilde=m_tilde, m_u=m_u)
        for k, (m_tilde, m_u) in enumerate(zip(moments.m_tilde, moments.m_u), start=1)
    ]
    emit_records(args, records, MomentRecord)
    return 0


def run_ivol(args: argparse.Namespace) -> int:
    result = estimate_iv(
        load_series(args.input), xi=args.xi, m=args.m, threshold=args.threshold
    )
    record = VolatilityRecord(
        beta_hat=result.beta_hat,
        rv_baseline=result.rv_baseline,
        xi=result.xi,
        m=result.m,
        S=result.S,
        flagged_negative=result.flagged_negative,
    )
    emit_records(args, [record], VolatilityRecord)
    return 0


def run_bandwidth(args: argparse.Namespace) -> int:
    selection = select_h_xi(
        load_series(args.input),
        BandwidthConfig(kernel=args.kernel, seed=args.seed, break_ties=args.tied),
    )
    if args.surface_out:
        SeriesIO().save_ise_surface(selection, args.surface_out)
    fields = set(BandwidthRecord.model_fields)
    record = BandwidthRecord(**selection.model_dump(include=fields))
    emit_records(args, [record], BandwidthRecord)
    return 0
