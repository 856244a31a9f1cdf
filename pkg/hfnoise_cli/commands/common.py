"""Output helpers shared by the subcommands."""

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, Type

import pandas as pd
from pydantic import BaseModel

from hfnoise.records import RecordWriter
from hfnoise.utils.series_io import FLOAT_FORMAT, SeriesIO


def emit_records(
    args: argparse.Namespace, records: Sequence[BaseModel], model_class: Type[BaseModel]
) -> None:
    """Write records to ``--out`` in ``--format``, or print them to stdout."""
    if args.out:
        RecordWriter(args.out, model_class).write(records, fmt=args.format)
        return
    rows = [record.model_dump(mode="json") for record in records]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        frame = pd.DataFrame(rows, columns=list(model_class.model_fields))
        frame.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT)


def emit_frame(args: argparse.Namespace, frame: pd.DataFrame) -> None:
    """Write a column table to ``--out`` or stdout, as CSV or JSON columns."""
    if args.format == "json":
        text = json.dumps({column: frame[column].tolist() for column in frame.columns})
        if args.out:
            path = Path(args.out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        else:
            print(text)
    elif args.out:
        SeriesIO().write_frame(frame, args.out)
    else:
        frame.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT)


def load_series(path: str):
    """Read a ``time,value`` series file."""
    return SeriesIO().load_series(path)
