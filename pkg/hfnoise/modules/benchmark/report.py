"""Aggregation of replication outcomes and report files."""

from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from hfnoise.modules.benchmark.schemas import (
    BenchmarkConfig,
    BenchmarkReport,
    CellSummary,
    DensitySummary,
    MomentSummary,
    ReplicationOutcome,
    VolatilitySummary,
)
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

REPORT_COLUMNS = [
    "model",
    "noise",
    "sigma_u",
    "delta_s",
    "kernel",
    "estimator",
    "statistic",
    "value",
]


def _mean_sd_x100(values: List[float]) -> Tuple[float, float]:
    array = np.asarray(values, dtype=float)
    sd = float(np.std(array, ddof=1)) if array.size > 1 else 0.0
    return 100.0 * float(np.mean(array)), 100.0 * sd


def _density_summary(outcomes: Sequence[ReplicationOutcome]) -> DensitySummary:
    values = [
        o.density.ise
        for o in outcomes
        if o.density is not None and o.density.ise is not None
    ]
    if not values:
        return DensitySummary(count=0)
    q25, median, q75 = np.percentile(values, [25, 50, 75])
    return DensitySummary(
        count=len(values), median=float(median), q25=float(q25), q75=float(q75)
    )


def _moment_summaries(
    outcomes: Sequence[ReplicationOutcome], kmax: int
) -> List[MomentSummary]:
    summaries = []
    for k in range(1, kmax + 1):
        deviations = [
            record.relative_deviation
            for outcome in outcomes
            for record in outcome.moments
            if record.k == k and record.relative_deviation is not None
        ]
        if deviations:
            mean, sd = _mean_sd_x100(deviations)
            summaries.append(
                MomentSummary(
                    k=k, count=len(deviations), mean_x100=mean, sd_x100=sd
                )
            )
        else:
            summaries.append(MomentSummary(k=k, count=0))
    return summaries


def _volatility_summary(outcomes: Sequence[ReplicationOutcome]) -> VolatilitySummary:
    records = [o.ivol for o in outcomes if o.ivol is not None and o.ivol.truth]
    if not records:
        return VolatilitySummary(count=0)
    deviations = [record.relative_deviation for record in records]
    baseline = [
        (record.rv_baseline - record.truth) / record.truth for record in records
    ]
    mean, sd = _mean_sd_x100(deviations)
    return VolatilitySummary(
        count=len(records),
        mean_x100=mean,
        sd_x100=sd,
        median_abs=float(np.median(np.abs(deviations))),
        rv_mean_x100=100.0 * float(np.mean(baseline)),
        negative=sum(record.flagged_negative for record in records),
    )


def summarize(
    config: BenchmarkConfig, outcomes: Sequence[ReplicationOutcome]
) -> BenchmarkReport:
    """Aggregate outcomes per cell, in the order of ``config.cells()``.

    Outcomes are sorted by replication index inside each cell before any
    statistic is computed.
    """
    by_cell: Dict[str, List[ReplicationOutcome]] = {}
    for outcome in outcomes:
        by_cell.setdefault(outcome.cell.label, []).append(outcome)

    summaries = []
    failures = 0
    for cell in config.cells():
        cell_outcomes = sorted(
            by_cell.get(cell.label, []), key=lambda o: o.replication
        )
        counts: Dict[str, int] = {}
        for outcome in cell_outcomes:
            for name in outcome.failures:
                counts[name] = counts.get(name, 0) + 1
        failures += sum(counts.values())
        estimators = config.estimators
        summaries.append(
            CellSummary(
                cell=cell,
                kernel=config.kernel,
                replications=len(cell_outcomes),
                density=(
                    _density_summary(cell_outcomes)
                    if "density" in estimators
                    else None
                ),
                moments=(
                    _moment_summaries(cell_outcomes, config.kmax)
                    if "moments" in estimators
                    else []
                ),
                ivol=(
                    _volatility_summary(cell_outcomes) if "ivol" in estimators else None
                ),
                failures=counts,
            )
        )
        if counts:
            logger.warning(f"{cell.label}: failures {counts}")

    attempts = len(outcomes) * len(config.estimators)
    return BenchmarkReport(
        config=config, cells=summaries, attempts=attempts, failures=failures
    )


def report_rows(report: BenchmarkReport) -> pd.DataFrame:
    """Flatten a report into one row per cell, estimator and statistic."""
    rows = []
    for summary in report.cells:
        base = {
            "model": summary.cell.model,
            "noise": summary.cell.noise,
            "sigma_u": summary.cell.sigma_u,
            "delta_s": summary.cell.delta_s,
            "kernel": summary.kernel,
        }
        blocks = []
        if summary.density is not None:
            blocks.append(("density", summary.density.model_dump()))
        for moment in summary.moments:
            blocks.append((f"moments_k{moment.k}", moment.model_dump(exclude={"k"})))
        if summary.ivol is not None:
            blocks.append(("ivol", summary.ivol.model_dump()))
        for name, count in summary.failures.items():
            blocks.append((name, {"failures": count}))
        for estimator, stats in blocks:
            for statistic, value in stats.items():
                rows.append(
                    {
                        **base,
                        "estimator": estimator,
                        "statistic": statistic,
                        "value": value,
                    }
                )
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def write_report(
    report: BenchmarkReport, directory: Union[str, Path]
) -> Tuple[Path, Path]:
    """Write ``report.json`` and ``report.csv`` into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    json_path = directory / "report.json"
    csv_path = directory / "report.csv"
    json_path.write_text(report.model_dump_json(indent=2))
    report_rows(report).to_csv(csv_path, index=False, float_format="%.17g")
    logger.info(f"Benchmark report written to {json_path} and {csv_path}")
    return json_path, csv_path
