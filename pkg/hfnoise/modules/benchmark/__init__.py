"""Monte Carlo benchmark of the noise and volatility estimators."""

from hfnoise.modules.benchmark.report import report_rows, summarize, write_report
from hfnoise.modules.benchmark.runner import BenchmarkRunner, run_benchmark

__all__ = [
    "BenchmarkRunner",
    "run_benchmark",
    "summarize",
    "report_rows",
    "write_report",
]
