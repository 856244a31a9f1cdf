"""``ingest``: clean a raw trade file into a series."""

import argparse

import pandas as pd

from hfnoise.modules.ingest import load_tick_csv, preprocess_ticks
from hfnoise_cli.commands.common import emit_frame


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "ingest", help="Clean raw trades into a log-price series"
    )
    parser.add_argument(
        "--input", required=True, help="CSV with timestamp,price[,cond,corr]"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    series = preprocess_ticks(load_tick_csv(args.input))
    emit_frame(args, pd.DataFrame({"time": series.times, "value": series.y}))
    return 0
