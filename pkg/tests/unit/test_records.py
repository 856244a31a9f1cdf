"""Unit tests for result records and RecordWriter."""

import json

import pandas as pd
import pytest
from pydantic import ValidationError

from hfnoise.records import RecordWriter
from hfnoise.records.models import (
    BandwidthRecord,
    DensityRecord,
    MomentRecord,
    VolatilityRecord,
)


class TestModels:
    """Test suite for the record models."""

    def test_moment_relative_deviation(self):
        record = MomentRecord(xi=1.0, k=1, m_tilde=2.2, m_u=1.1, truth=1.0)

        assert record.relative_deviation == pytest.approx(0.1)

    def test_relative_deviation_without_truth(self):
        record = VolatilityRecord(beta_hat=1.0, rv_baseline=2.0, xi=1.0, m=50, S=3.0)

        assert record.relative_deviation is None

    def test_volatility_relative_deviation(self):
        record = VolatilityRecord(
            beta_hat=0.9, rv_baseline=2.0, xi=1.0, m=50, S=3.0, truth=1.0
        )

        assert record.relative_deviation == pytest.approx(-0.1)

    def test_density_record_rejects_negative_ise(self):
        with pytest.raises(ValidationError):
            DensityRecord(kernel="sinc", h=1.0, xi=1.0, ise=-0.1)


class TestRecordWriter:
    """Test suite for RecordWriter class."""

    class TestInit:
        """Test initialization methods."""

        def test_init_stores_path_and_model(self, tmp_path):
            writer = RecordWriter(tmp_path / "out.json", BandwidthRecord)

            assert writer.path == tmp_path / "out.json"
            assert writer.model_class is BandwidthRecord

    class TestWrite:
        """Test write method."""

        def test_write_json_and_read_back(self, tmp_path):
            records = [
                MomentRecord(xi=0.5, k=1, m_tilde=2.0, m_u=1.0, truth=1.0),
                MomentRecord(xi=0.5, k=2, m_tilde=12.0, m_u=3.0),
            ]
            writer = RecordWriter(tmp_path / "nested" / "moments.json", MomentRecord)
            path = writer.write(records)

            assert path.exists()
            assert json.loads(path.read_text())[1]["truth"] is None
            assert writer.read() == records

        def test_write_csv_columns(self, tmp_path):
            record = BandwidthRecord(h1=0.02, xi1=1.0, h2=0.04, h_hat=0.01, xi_hat=1.0)
            path = RecordWriter(tmp_path / "bw.csv", BandwidthRecord).write(
                [record], fmt="csv"
            )
            frame = pd.read_csv(path)

            assert list(frame.columns) == ["h1", "xi1", "h2", "h_hat", "xi_hat"]
            assert frame["h_hat"].iloc[0] == 0.01

        def test_write_rejects_unknown_format(self, tmp_path):
            writer = RecordWriter(tmp_path / "x.txt", BandwidthRecord)

            with pytest.raises(ValueError):
                writer.write([], fmt="xml")

    class TestRead:
        """Test read method."""

        def test_read_missing_file(self, tmp_path):
            with pytest.raises(FileNotFoundError):
                RecordWriter(tmp_path / "missing.json", MomentRecord).read()
