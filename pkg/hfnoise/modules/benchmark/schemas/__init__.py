from .benchmark_schemas import (
    BenchmarkConfig,
    BenchmarkReport,
    CellSpec,
    CellSummary,
    DensitySummary,
    EstimatorName,
    MomentSummary,
    ReplicationOutcome,
    VolatilitySummary,
)

__all__ = [
    "BenchmarkConfig",
    "BenchmarkReport",
    "CellSpec",
    "CellSummary",
    "DensitySummary",
    "EstimatorName",
    "MomentSummary",
    "ReplicationOutcome",
    "VolatilitySummary",
]
