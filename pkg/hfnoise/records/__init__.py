from .models import BandwidthRecord, DensityRecord, MomentRecord, VolatilityRecord
from .writer import OutputFormat, RecordWriter

__all__ = [
    "BandwidthRecord",
    "DensityRecord",
    "MomentRecord",
    "VolatilityRecord",
    "OutputFormat",
    "RecordWriter",
]
