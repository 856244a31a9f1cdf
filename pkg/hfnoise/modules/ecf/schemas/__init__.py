from .ecf_schemas import CharFnEstimate, CharFnKind, NeighborhoodIndex

__all__ = ["CharFnEstimate", "CharFnKind", "NeighborhoodIndex"]
