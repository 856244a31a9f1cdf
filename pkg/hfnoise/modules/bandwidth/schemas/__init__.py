from .bandwidth_schemas import (
    GAP_TOLERANCE,
    BandwidthConfig,
    BandwidthSelection,
    OracleResult,
    PilotBandwidth,
    SurrogateSeries,
)

__all__ = [
    "GAP_TOLERANCE",
    "BandwidthConfig",
    "BandwidthSelection",
    "OracleResult",
    "PilotBandwidth",
    "SurrogateSeries",
]
