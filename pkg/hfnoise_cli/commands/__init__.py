from . import bench, estimate, ingest, simulate

__all__ = ["bench", "estimate", "ingest", "simulate"]
