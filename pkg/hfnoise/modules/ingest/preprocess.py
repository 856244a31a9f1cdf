"""Cleaning of raw trade records into an observation series.

Records are dropped when the price is zero or negative, the correlation
indicator is negative, the condition code is set to anything other than E
or F, or the trade lies outside 9:30-16:00. Trades sharing a timestamp are
replaced by their median price. Observations are log prices; times are
year fractions under the 252-day, 6.5-hour convention, shifted to start at
zero.
"""

from datetime import date, datetime, timedelta
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from hfnoise.core.exceptions import EmptySeriesError, InvalidInputError
from hfnoise.modules.ingest.schemas import RawTickRecord
from hfnoise.modules.simulation.schemas import (
    SECONDS_PER_DAY,
    TRADING_DAYS,
    TickSeries,
    TimeGrid,
)
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

ALLOWED_CONDITIONS = frozenset({"E", "F"})
SESSION_OPEN = pd.Timedelta(hours=9, minutes=30)
SESSION_CLOSE = pd.Timedelta(hours=16)
SECONDS_PER_YEAR = TRADING_DAYS * SECONDS_PER_DAY

COLUMNS = ["timestamp", "price", "condition_code", "correlation_indicator"]


class TickCleaner:
    """Applies the trade-cleaning rules to a frame of raw records.

    Examples
    --------
    >>> cleaner = TickCleaner()
    >>> cleaned, stats = cleaner.clean(frame)
    >>> stats["final_rows"]
    """

    def clean(self, frame: pd.DataFrame) -> Tuple[pd.DataFrame, Dict[str, int]]:
        """Clean raw records.

        Parameters
        ----------
        frame : pd.DataFrame
            Columns ``timestamp``, ``price``, ``condition_code`` and
            ``correlation_indicator``.

        Returns
        -------
        tuple of (pd.DataFrame, dict)
            One row per distinct timestamp, sorted, with columns
            ``timestamp`` and ``price``; and the number of rows removed by
            each rule.
        """
        stats = {"initial_rows": len(frame)}
        frame = frame.sort_values("timestamp", kind="stable").reset_index(drop=True)

        frame, dropped = self._drop_invalid(frame)
        stats.update(dropped)
        frame, stats["outside_session"] = self._keep_session(frame)
        frame = self._merge_duplicates(frame)

        stats["final_rows"] = len(frame)
        logger.info(
            f"Cleaning complete. {stats['initial_rows']} records in, "
            f"{stats['final_rows']} observations out"
        )
        return frame, stats

    def _drop_invalid(self, frame: pd.DataFrame) -> Tuple[pd.DataFrame, Dict[str, int]]:
        stats = {}
        before = len(frame)
        frame = frame[frame["price"] > 0]
        stats["nonpositive_price"] = before - len(frame)

        before = len(frame)
        corr = pd.to_numeric(frame["correlation_indicator"], errors="coerce")
        frame = frame[~(corr.notna() & (corr < 0))]
        stats["negative_corr"] = before - len(frame)

        before = len(frame)
        cond = frame["condition_code"].fillna("").astype(str).str.strip()
        frame = frame[(cond == "") | cond.isin(ALLOWED_CONDITIONS)]
        stats["condition_code"] = before - len(frame)
        return frame, stats

    def _keep_session(self, frame: pd.DataFrame) -> Tuple[pd.DataFrame, int]:
        clock = frame["timestamp"] - frame["timestamp"].dt.normalize()
        inside = (clock >= SESSION_OPEN) & (clock <= SESSION_CLOSE)
        return frame[inside], int((~inside).sum())

    def _merge_duplicates(self, frame: pd.DataFrame) -> pd.DataFrame:
        merged = frame.groupby("timestamp", sort=True)["price"].median()
        if len(merged) < len(frame):
            merged_count = len(frame) - len(merged)
            logger.debug(f"Merged {merged_count} duplicate-timestamp records")
        return merged.reset_index()


def _records_frame(records: Sequence[RawTickRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([record.model_dump() for record in records], columns=COLUMNS)
    frame["timestamp"] = pd.to_datetime(frame["timestamp"])
    frame["price"] = frame["price"].astype(float)
    frame["correlation_indicator"] = pd.to_numeric(frame["correlation_indicator"])
    return frame


def _year_fractions(timestamps: pd.Series) -> np.ndarray:
    days = timestamps.dt.normalize()
    day_index = days.rank(method="dense").to_numpy() - 1.0
    clock = (timestamps - days - SESSION_OPEN).dt.total_seconds().to_numpy()
    seconds = day_index * SECONDS_PER_DAY + clock
    return (seconds - seconds[0]) / SECONDS_PER_YEAR


def preprocess_ticks(records: Sequence[RawTickRecord]) -> TickSeries:
    """Clean raw records into a log-price series on a year-fraction grid.

    Trading days are numbered by their rank among the dates present, so
    gaps between sessions (weekends, holidays) are removed.

    Returns
    -------
    TickSeries
        Empty when ``records`` is empty. Ingested grids carry no spacing
        ratio bound.

    Raises
    ------
    EmptySeriesError
        If records were given but none survives cleaning.
    """
    if len(records) == 0:
        return TickSeries(grid=TimeGrid(points=[], horizon=0.0, ratio_bound=None), y=[])

    cleaned, _ = TickCleaner().clean(_records_frame(records))
    if cleaned.empty:
        message = f"no record out of {len(records)} survived cleaning"
        logger.error(message)
        raise EmptySeriesError(message)

    times = _year_fractions(cleaned["timestamp"])
    prices = cleaned["price"].to_numpy(dtype=float)
    # a 16:00 print and the next session's 9:30 print share one year time;
    # the opening print is kept
    keep = np.append(np.diff(times) > 0.0, True)
    if not keep.all():
        dropped = int((~keep).sum())
        logger.info(f"Dropped {dropped} closing prints overlapping the next open")
    times, prices = times[keep], prices[keep]
    grid = TimeGrid(points=times, horizon=float(times[-1]), ratio_bound=None)
    return TickSeries(grid=grid, y=np.log(prices))


def series_to_records(series: TickSeries, first_day: date) -> List[RawTickRecord]:
    """Rebuild clean records from a series, the first one at 9:30 on ``first_day``.

    Consecutive trading days map to consecutive calendar days.
    """
    seconds = np.rint(series.times * SECONDS_PER_YEAR * 1e6) / 1e6
    midnight = datetime.combine(first_day, datetime.min.time())
    start = midnight + timedelta(hours=9, minutes=30)
    records = []
    for offset, value in zip(seconds, series.y):
        day, clock = divmod(float(offset), SECONDS_PER_DAY)
        stamp = start + timedelta(days=day, seconds=clock)
        records.append(RawTickRecord(timestamp=stamp, price=float(np.exp(value))))
    return records


def load_tick_csv(path: Union[str, Path]) -> List[RawTickRecord]:
    """Read ``timestamp,price[,cond,corr]`` records from a CSV file.

    Timestamps are ISO-8601 strings or epoch seconds. Unknown columns are
    ignored.

    Raises
    ------
    InvalidInputError
        If the ``timestamp`` or ``price`` column is missing.
    """
    frame = pd.read_csv(path, float_precision="round_trip")
    missing = {"timestamp", "price"} - set(frame.columns)
    if missing:
        message = f"{path} lacks columns {sorted(missing)}"
        logger.error(message)
        raise InvalidInputError(message)

    if pd.api.types.is_numeric_dtype(frame["timestamp"]):
        stamps = pd.to_datetime(frame["timestamp"], unit="s")
    else:
        stamps = pd.to_datetime(frame["timestamp"], format="ISO8601")
    cond = frame["cond"] if "cond" in frame.columns else pd.Series([None] * len(frame))
    corr = frame["corr"] if "corr" in frame.columns else pd.Series([None] * len(frame))

    records = []
    for stamp, price, code, indicator in zip(stamps, frame["price"], cond, corr):
        records.append(
            RawTickRecord(
                timestamp=stamp.to_pydatetime(),
                price=float(price),
                condition_code=None if pd.isna(code) else str(code),
                correlation_indicator=None if pd.isna(indicator) else int(indicator),
            )
        )
    logger.info(f"Loaded {len(records)} raw records from {path}")
    return records
