"""Unit tests for tick cleaning, ingestion and tie breaking."""

import math
from datetime import date, datetime, timedelta

import numpy as np
import pandas as pd
import pytest
from scipy import stats

from hfnoise.core.exceptions import EmptySeriesError, InvalidInputError
from hfnoise.modules.ingest import (
    TickCleaner,
    break_ties,
    load_tick_csv,
    preprocess_ticks,
    series_to_records,
    tie_scales,
)
from hfnoise.modules.ingest.schemas import RawTickRecord
from hfnoise.modules.simulation.schemas import SECONDS_PER_DAY, TRADING_DAYS

YEAR_SECONDS = TRADING_DAYS * SECONDS_PER_DAY


def tick(clock, price, cond=None, corr=None, day=2):
    hours, minutes, seconds = clock
    return RawTickRecord(
        timestamp=datetime(2024, 1, day, hours, minutes, seconds),
        price=price,
        condition_code=cond,
        correlation_indicator=corr,
    )


class TestPreprocessTicks:
    """Test suite for preprocess_ticks."""

    def test_empty_input(self):
        series = preprocess_ticks([])

        assert len(series) == 0
        assert series.grid.horizon == 0.0

    def test_median_of_duplicate_timestamps(self):
        records = [
            tick((10, 0, 0), 10.0),
            tick((10, 0, 0), 12.0),
            tick((10, 0, 0), 11.0),
            tick((10, 0, 5), 11.5),
        ]
        series = preprocess_ticks(records)

        assert len(series) == 2
        assert series.y[0] == pytest.approx(math.log(11.0))
        assert series.y[1] == pytest.approx(math.log(11.5))

    def test_drops_non_positive_prices(self):
        records = [
            tick((10, 0, 0), 10.0),
            tick((10, 0, 1), -1.0),
            tick((10, 0, 2), 0.0),
        ]

        assert len(preprocess_ticks(records)) == 1

    def test_drops_flagged_records(self):
        records = [
            tick((10, 0, 0), 10.0),
            tick((10, 0, 1), 10.1, corr=-1),
            tick((10, 0, 2), 10.2, cond="Z"),
            tick((10, 0, 3), 10.3, cond="E"),
            tick((10, 0, 4), 10.4, cond="F", corr=0),
        ]
        series = preprocess_ticks(records)

        np.testing.assert_allclose(series.y, np.log([10.0, 10.3, 10.4]))

    def test_keeps_regular_session_only(self):
        records = [
            tick((9, 29, 59), 10.0),
            tick((9, 30, 0), 10.1),
            tick((16, 0, 0), 10.2),
            tick((16, 0, 1), 10.3),
        ]
        series = preprocess_ticks(records)

        np.testing.assert_allclose(series.y, np.log([10.1, 10.2]))
        assert series.times[-1] == pytest.approx(SECONDS_PER_DAY / YEAR_SECONDS)

    def test_year_fraction_times(self):
        records = [
            tick((9, 45, 0), 10.0),
            tick((9, 45, 30), 10.0),
            tick((10, 0, 0), 10.0),
        ]
        series = preprocess_ticks(records)
        expected = np.array([0.0, 30.0, 900.0]) / YEAR_SECONDS

        np.testing.assert_allclose(series.times, expected)
        assert series.grid.ratio_bound is None

    def test_sessions_are_concatenated(self):
        records = [
            tick((15, 59, 0), 10.0, day=5),
            tick((16, 0, 0), 10.1, day=5),
            tick((9, 30, 0), 10.2, day=8),
            tick((9, 31, 0), 10.3, day=8),
        ]
        series = preprocess_ticks(records)

        np.testing.assert_allclose(series.y, np.log([10.0, 10.2, 10.3]))
        expected = np.array([0.0, 60.0, 120.0]) / YEAR_SECONDS
        np.testing.assert_allclose(series.times, expected)

    def test_nothing_survives(self):
        with pytest.raises(EmptySeriesError):
            preprocess_ticks([tick((10, 0, 0), -5.0), tick((20, 0, 0), 10.0)])

    def test_round_trip_is_identity(self, rng):
        offsets = np.sort(rng.choice(2 * 23_400, size=200, replace=False))
        records = [
            RawTickRecord(
                timestamp=datetime(2024, 1, 2 + int(s) // 23_400, 9, 30)
                + timedelta(seconds=int(s) % 23_400),
                price=float(100.0 + rng.normal()),
            )
            for s in offsets
        ]
        series = preprocess_ticks(records)
        again = preprocess_ticks(series_to_records(series, date(2024, 3, 4)))

        np.testing.assert_allclose(again.times, series.times, rtol=0.0, atol=1e-15)
        np.testing.assert_allclose(again.y, series.y, rtol=1e-14)


class TestTickCleaner:
    """Test suite for TickCleaner."""

    class TestClean:
        """Test clean method."""

        def test_reports_counts(self):
            frame = pd.DataFrame(
                {
                    "timestamp": pd.to_datetime(
                        [
                            "2024-01-02 10:00:00",
                            "2024-01-02 10:00:00",
                            "2024-01-02 10:00:01",
                            "2024-01-02 08:00:00",
                            "2024-01-02 10:00:02",
                        ]
                    ),
                    "price": [10.0, 11.0, -1.0, 10.0, 10.0],
                    "condition_code": [None, None, None, None, "T"],
                    "correlation_indicator": [None, None, None, None, None],
                }
            )
            cleaned, counts = TickCleaner().clean(frame)

            assert counts["initial_rows"] == 5
            assert counts["nonpositive_price"] == 1
            assert counts["condition_code"] == 1
            assert counts["outside_session"] == 1
            assert counts["final_rows"] == 1
            assert cleaned["price"].iloc[0] == 10.5


class TestLoadTickCsv:
    """Test suite for load_tick_csv."""

    def test_iso_timestamps_with_flags(self, tmp_path):
        path = tmp_path / "ticks.csv"
        path.write_text(
            "timestamp,price,cond,corr,venue\n"
            "2024-01-02T10:00:00,10.0,,0,N\n"
            "2024-01-02T10:00:01,10.5,T,,N\n"
        )
        records = load_tick_csv(path)

        assert len(records) == 2
        assert records[0].timestamp == datetime(2024, 1, 2, 10, 0, 0)
        assert records[0].condition_code is None
        assert records[0].correlation_indicator == 0
        assert records[1].condition_code == "T"
        assert records[1].correlation_indicator is None

    def test_epoch_seconds(self, tmp_path):
        path = tmp_path / "ticks.csv"
        path.write_text("timestamp,price\n1704189600,10.0\n")

        assert load_tick_csv(path)[0].timestamp == datetime(2024, 1, 2, 10, 0, 0)

    def test_prices_keep_full_precision(self, tmp_path, rng):
        prices = 10.0 + rng.random(50)
        rows = [f"{1704189600 + i},{price:.17g}" for i, price in enumerate(prices)]
        path = tmp_path / "ticks.csv"
        path.write_text("timestamp,price\n" + "\n".join(rows) + "\n")

        assert [record.price for record in load_tick_csv(path)] == prices.tolist()

    def test_missing_column(self, tmp_path):
        path = tmp_path / "ticks.csv"
        path.write_text("time,price\n1,2\n")

        with pytest.raises(InvalidInputError):
            load_tick_csv(path)


class TestBreakTies:
    """Test suite for tie_scales and break_ties."""

    def test_tied_zeros(self):
        np.testing.assert_array_equal(tie_scales([0.0, 0.0, 1.0]), [0.5, 0.5, 0.5])

    def test_uniform_gap(self):
        scales = tie_scales([0.0, 0.2, 0.4, 0.6, 0.8])

        np.testing.assert_allclose(scales[1:-1], 0.1)

    def test_seed_fixes_perturbation(self):
        deltas = np.repeat([-0.01, 0.0, 0.01], 5)

        first = break_ties(deltas, seed=4)

        np.testing.assert_array_equal(first, break_ties(deltas, seed=4))
        assert np.unique(first).size == deltas.size

    def test_preserves_distribution(self, rng):
        deltas = np.round(rng.normal(size=20_000), 2)
        perturbed = break_ties(deltas, seed=9)

        assert stats.ks_2samp(deltas, perturbed).statistic <= 0.01

    def test_rejects_single_value(self):
        with pytest.raises(InvalidInputError):
            break_ties(np.zeros(10))
