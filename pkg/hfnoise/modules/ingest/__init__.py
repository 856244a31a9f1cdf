"""Trade-record ingestion, cleaning and tie breaking."""

from hfnoise.modules.ingest.preprocess import (
    TickCleaner,
    load_tick_csv,
    preprocess_ticks,
    series_to_records,
)
from hfnoise.modules.ingest.ties import break_ties, tie_scales

__all__ = [
    "TickCleaner",
    "preprocess_ticks",
    "series_to_records",
    "load_tick_csv",
    "break_ties",
    "tie_scales",
]
