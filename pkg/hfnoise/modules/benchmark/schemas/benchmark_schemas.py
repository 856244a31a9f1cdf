"""Benchmark configuration, per-replication outcomes and the report."""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from hfnoise.modules.density.schemas import KernelFamily
from hfnoise.modules.simulation.schemas import HestonParams, NoiseSpec
from hfnoise.records import DensityRecord, MomentRecord, VolatilityRecord

EstimatorName = Literal["density", "moments", "ivol"]
ModelName = Literal["i", "ii"]
NoiseFamily = Literal["normal", "scaled_t8"]


class BenchmarkConfig(BaseModel):
    """Monte Carlo design of a benchmark run.

    Cells are the product of ``models``, ``noise_families``,
    ``sigma_u_values`` and ``delta_s_values``. Replication r of every cell
    is seeded with ``child_seed(master_seed, r)``.

    Attributes
    ----------
    models : list of {"i", "ii"}
        Heston parameter sets.
    noise_families : list of {"normal", "scaled_t8"}
        Error laws.
    sigma_u_values : list of float
        Error scales.
    delta_s_values : list of int
        Sampling intervals in seconds.
    replications : int
        Replications per cell.
    master_seed : int
        Seed from which every replication seed is derived.
    kernel : {"sinc", "gaussian"}
        Deconvolution kernel of the density estimator.
    estimators : list of {"density", "moments", "ivol"}
        Estimators run on every replication.
    jitter : float
        Interior grid displacement as a fraction of dt.
    workers : int
        Worker processes; results do not depend on it.
    substeps : int
        Euler sub-steps per observation interval.
    moment_scale : float
        Rescaling factor c applied before moment estimation.
    kmax : int
        Highest moment order k reported.
    """

    models: List[ModelName] = Field(default_factory=lambda: ["i"], min_length=1)
    noise_families: List[NoiseFamily] = Field(
        default_factory=lambda: ["normal"], min_length=1
    )
    sigma_u_values: List[float] = Field(default_factory=lambda: [0.005], min_length=1)
    delta_s_values: List[int] = Field(default_factory=lambda: [30], min_length=1)
    replications: int = Field(default=10, ge=1)
    master_seed: int = Field(default=20240501, ge=0)
    kernel: KernelFamily = "sinc"
    estimators: List[EstimatorName] = Field(
        default_factory=lambda: ["density", "moments", "ivol"], min_length=1
    )
    jitter: float = Field(default=0.0, ge=0.0, lt=0.5)
    workers: int = Field(default=1, ge=1)
    substeps: int = Field(default=10, ge=1)
    moment_scale: float = Field(default=100.0, gt=0.0)
    kmax: int = Field(default=2, ge=1, le=8)

    @field_validator("sigma_u_values")
    @classmethod
    def _check_sigma(cls, values: List[float]) -> List[float]:
        if any(value <= 0.0 for value in values):
            raise ValueError("sigma_u values must be positive")
        return values

    @field_validator("delta_s_values")
    @classmethod
    def _check_delta_s(cls, values: List[int]) -> List[int]:
        if any(not 1 <= value <= 1800 for value in values):
            raise ValueError("delta_s values must lie in [1, 1800]")
        return values

    def cells(self) -> List["CellSpec"]:
        return [
            CellSpec(model=model, noise=noise, sigma_u=sigma_u, delta_s=delta_s)
            for model in self.models
            for noise in self.noise_families
            for sigma_u in self.sigma_u_values
            for delta_s in self.delta_s_values
        ]


class CellSpec(BaseModel):
    """One combination of model, error law and sampling interval."""

    model: ModelName
    noise: NoiseFamily
    sigma_u: float = Field(..., gt=0.0)
    delta_s: int = Field(..., ge=1, le=1800)

    @property
    def params(self) -> HestonParams:
        return HestonParams.named(self.model)

    @property
    def noise_spec(self) -> NoiseSpec:
        return NoiseSpec(family=self.noise, sigma_u=self.sigma_u)

    @property
    def label(self) -> str:
        return (
            f"model={self.model} noise={self.noise} "
            f"sigma_u={self.sigma_u} delta_s={self.delta_s}"
        )


class ReplicationOutcome(BaseModel):
    """Records and failures of one replication of one cell."""

    cell: CellSpec
    replication: int = Field(..., ge=0)
    density: Optional[DensityRecord] = None
    moments: List[MomentRecord] = Field(default_factory=list)
    ivol: Optional[VolatilityRecord] = None
    failures: Dict[str, str] = Field(default_factory=dict)


class DensitySummary(BaseModel):
    """Median and quartiles of the ISE."""

    count: int
    median: Optional[float] = None
    q25: Optional[float] = None
    q75: Optional[float] = None


class MomentSummary(BaseModel):
    """Mean and standard deviation of relative deviations, times 100."""

    k: int
    count: int
    mean_x100: Optional[float] = None
    sd_x100: Optional[float] = None


class VolatilitySummary(BaseModel):
    """Relative deviations of the volatility estimate and of the baseline."""

    count: int
    mean_x100: Optional[float] = None
    sd_x100: Optional[float] = None
    median_abs: Optional[float] = None
    rv_mean_x100: Optional[float] = None
    negative: int = 0


class CellSummary(BaseModel):
    """Aggregated results of one cell."""

    cell: CellSpec
    kernel: KernelFamily
    replications: int
    density: Optional[DensitySummary] = None
    moments: List[MomentSummary] = Field(default_factory=list)
    ivol: Optional[VolatilitySummary] = None
    failures: Dict[str, int] = Field(default_factory=dict)


class BenchmarkReport(BaseModel):
    """Complete benchmark report."""

    config: BenchmarkConfig
    cells: List[CellSummary]
    attempts: int = Field(..., ge=0)
    failures: int = Field(..., ge=0)

    @property
    def failure_rate(self) -> float:
        return self.failures / self.attempts if self.attempts else 0.0
