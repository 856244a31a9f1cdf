"""Shared pytest configuration and fixtures."""

import os
import tempfile

# route log files away from the repository before hfnoise is imported
os.environ.setdefault(
    "HFNOISE_LOG_DIR", os.path.join(tempfile.gettempdir(), "hfnoise-tests")
)

import numpy as np  # noqa: E402
import pytest  # noqa: E402

from tests.fixtures.series_examples import (  # noqa: E402
    equispaced_series,
    noise_only_series,
    three_point_series,
)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def three_points():
    return three_point_series()


@pytest.fixture
def small_noisy_series():
    return noise_only_series(n=400, sigma_u=0.01, seed=3)


@pytest.fixture
def constant_series():
    return equispaced_series(np.full(30, 4.2))
