from .density_schemas import DensityEstimate, KernelFamily, KernelSpec

__all__ = ["DensityEstimate", "KernelFamily", "KernelSpec"]
