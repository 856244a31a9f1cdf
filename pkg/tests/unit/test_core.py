"""Unit tests for settings, exceptions and seed derivation."""

import pytest

from hfnoise.core.config import Settings, get_settings, reset_settings
from hfnoise.core.exceptions import (
    EmptyNeighborhoodError,
    EstimationError,
    GridRatioError,
    HFNoiseError,
    InvalidInputError,
)
from hfnoise.core.seeding import child_seed, splitmix64


class TestSettings:
    """Test suite for Settings."""

    class TestFromEnv:
        """Test from_env method."""

        def test_defaults_without_environment(self, monkeypatch):
            for name in ("HFNOISE_WORKERS", "HFNOISE_SEED", "HFNOISE_MAX_FAILURE_RATE"):
                monkeypatch.delenv(name, raising=False)
            settings = Settings.from_env()

            assert settings.workers == 1
            assert settings.seed == 20240501
            assert settings.max_failure_rate == 0.1

        def test_reads_environment(self, monkeypatch):
            monkeypatch.setenv("HFNOISE_WORKERS", "4")
            monkeypatch.setenv("HFNOISE_SEED", "99")
            settings = Settings.from_env()

            assert settings.workers == 4
            assert settings.seed == 99

        def test_rejects_invalid_workers(self, monkeypatch):
            monkeypatch.setenv("HFNOISE_WORKERS", "0")

            with pytest.raises(ValueError):
                Settings.from_env()

    class TestGetSettings:
        """Test the lazy settings accessor."""

        def test_returns_cached_instance(self):
            reset_settings()
            first = get_settings()

            assert get_settings() is first

        def test_reset_rereads_environment(self, monkeypatch):
            monkeypatch.setenv("HFNOISE_SEED", "5")
            reset_settings()
            try:
                assert get_settings().seed == 5
            finally:
                monkeypatch.undo()
                reset_settings()


class TestExceptions:
    """Test the exception hierarchy."""

    def test_invalid_input_is_value_error(self):
        assert issubclass(InvalidInputError, ValueError)
        assert issubclass(GridRatioError, InvalidInputError)

    def test_estimation_errors_share_base(self):
        assert issubclass(EmptyNeighborhoodError, EstimationError)
        assert issubclass(EstimationError, HFNoiseError)
        assert not issubclass(EstimationError, ValueError)


class TestSeeding:
    """Test suite for child-seed derivation."""

    def test_splitmix64_known_value(self):
        # first output of the reference generator seeded with 0
        assert splitmix64(0) == 0xE220A8397B1DCDAF

    def test_child_seed_is_deterministic(self):
        assert child_seed(20240501, 3) == child_seed(20240501, 3)

    def test_child_seeds_differ_across_indices(self):
        seeds = {child_seed(1, index) for index in range(1000)}

        assert len(seeds) == 1000

    def test_child_seed_fits_64_bits(self):
        assert 0 <= child_seed(2**70, 5) < 2**64

    def test_rejects_negative_input(self):
        with pytest.raises(ValueError):
            child_seed(-1, 0)
