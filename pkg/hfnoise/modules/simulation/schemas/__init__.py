from .simulation_schemas import (
    SECONDS_PER_DAY,
    TRADING_DAYS,
    YEAR_HORIZON,
    HestonParams,
    NoiseSpec,
    PathSample,
    TickSeries,
    TimeGrid,
)

__all__ = [
    "SECONDS_PER_DAY",
    "TRADING_DAYS",
    "YEAR_HORIZON",
    "TimeGrid",
    "HestonParams",
    "NoiseSpec",
    "PathSample",
    "TickSeries",
]
