from .volatility_schemas import MultiscaleWeights, SGridSelection, VolatilityResult

__all__ = ["MultiscaleWeights", "SGridSelection", "VolatilityResult"]
