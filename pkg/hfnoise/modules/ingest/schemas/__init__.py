from .ingest_schemas import RawTickRecord

__all__ = ["RawTickRecord"]
