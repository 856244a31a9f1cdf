from .moments_schemas import MAX_MOMENT_ORDER, MomentSet

__all__ = ["MAX_MOMENT_ORDER", "MomentSet"]
