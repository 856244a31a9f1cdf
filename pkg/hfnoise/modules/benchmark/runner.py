"""Monte Carlo benchmark of the estimators on simulated Heston data.

Each replication simulates a path and its noisy observations, then runs the
selected estimator nodes. Failures of a node are recorded and the
replication continues with the next node.
"""

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

from hfnoise.core.exceptions import HFNoiseError
from hfnoise.core.seeding import child_seed
from hfnoise.modules.bandwidth import select_h_xi
from hfnoise.modules.bandwidth.schemas import BandwidthConfig
from hfnoise.modules.benchmark.report import summarize
from hfnoise.modules.benchmark.schemas import (
    BenchmarkConfig,
    BenchmarkReport,
    CellSpec,
    EstimatorName,
    ReplicationOutcome,
)
from hfnoise.modules.density import default_x_grid, estimate_density, ise
from hfnoise.modules.density.schemas import KernelSpec
from hfnoise.modules.moments import estimate_moments
from hfnoise.modules.simulation import (
    generate_noise,
    make_observations,
    make_time_grid,
    noise_density,
    rescale_model,
    simulate_heston,
    true_noise_moments,
)
from hfnoise.modules.simulation.schemas import NoiseSpec, PathSample, TickSeries
from hfnoise.modules.volatility import estimate_iv
from hfnoise.records import DensityRecord, MomentRecord, VolatilityRecord
from hfnoise.utils.logger import Logger

logger = Logger().get_logger()

# sub-streams of a replication seed
GRID_STREAM, PATH_STREAM, NOISE_STREAM, BANDWIDTH_STREAM = range(4)

Simulation = Tuple[TickSeries, PathSample, NoiseSpec]
Node = Callable[[CellSpec, int, ReplicationOutcome], None]


class BenchmarkRunner:
    """Runs replications of every benchmark cell.

    Replication r of every cell draws from ``child_seed(master_seed, r)``,
    so cells share random numbers and the report does not depend on the
    number of workers.

    Attributes
    ----------
    config : BenchmarkConfig
        Monte Carlo design.
    nodes : dict of str to callable
        Estimator node for each estimator name.

    Examples
    --------
    >>> runner = BenchmarkRunner(BenchmarkConfig(replications=2))
    >>> report = runner.run()
    >>> report.cells[0].density.median
    """

    def __init__(self, config: BenchmarkConfig):
        """Initialize the runner and its estimator nodes.

        Parameters
        ----------
        config : BenchmarkConfig
            Monte Carlo design.
        """
        self.config = config
        self.nodes: Dict[EstimatorName, Node] = {
            "density": self._density_node,
            "moments": self._moments_node,
            "ivol": self._ivol_node,
        }
        self._cache: Dict[Tuple[str, int], Simulation] = {}

    def _simulate(self, cell: CellSpec, seed: int, scale: float = 1.0) -> Simulation:
        """Simulate one replication, optionally under the rescaled model."""
        grid = make_time_grid(
            cell.delta_s,
            jitter=self.config.jitter,
            seed=child_seed(seed, GRID_STREAM),
        )
        params, spec = cell.params, cell.noise_spec
        if scale != 1.0:
            params, spec = rescale_model(params, spec, scale)
        path = simulate_heston(
            params,
            grid,
            substeps=self.config.substeps,
            seed=child_seed(seed, PATH_STREAM),
        )
        noise = generate_noise(spec, len(grid), seed=child_seed(seed, NOISE_STREAM))
        return make_observations(path, noise), path, spec

    def _simulation(self, cell: CellSpec, seed: int) -> Simulation:
        key = (cell.label, seed)
        if key not in self._cache:
            self._cache = {key: self._simulate(cell, seed)}
        return self._cache[key]

    def _density_node(
        self, cell: CellSpec, seed: int, outcome: ReplicationOutcome
    ) -> None:
        """Select (h_hat, xi_hat), estimate the error density and score its ISE."""
        series, _, spec = self._simulation(cell, seed)
        selection = select_h_xi(
            series,
            BandwidthConfig(
                kernel=self.config.kernel, seed=child_seed(seed, BANDWIDTH_STREAM)
            ),
        )
        kernel = KernelSpec(family=self.config.kernel, h=selection.h_hat)
        estimate = estimate_density(
            series, kernel, selection.xi_hat, x_grid=default_x_grid(series)
        )
        outcome.density = DensityRecord(
            delta_s=cell.delta_s,
            model=cell.model,
            noise=cell.noise,
            kernel=self.config.kernel,
            h=selection.h_hat,
            xi=selection.xi_hat,
            ise=ise(estimate, noise_density(spec)),
        )

    def _moments_node(
        self, cell: CellSpec, seed: int, outcome: ReplicationOutcome
    ) -> None:
        """Estimate noise moments on the rescaled data with xi = t_1 - t_0."""
        series, _, spec = self._simulate(cell, seed, scale=self.config.moment_scale)
        moments = estimate_moments(series, kmax=self.config.kmax)
        truth = true_noise_moments(spec, self.config.kmax)
        outcome.moments = [
            MomentRecord(
                xi=moments.xi,
                k=k,
                m_tilde=moments.m_tilde[k - 1],
                m_u=moments.m_u[k - 1],
                truth=truth[k - 1],
            )
            for k in range(1, moments.kmax + 1)
        ]

    def _ivol_node(
        self, cell: CellSpec, seed: int, outcome: ReplicationOutcome
    ) -> None:
        """Estimate the integrated variance with xi = t_1 - t_0, m = 50."""
        series, path, _ = self._simulation(cell, seed)
        result = estimate_iv(series)
        outcome.ivol = VolatilityRecord(
            beta_hat=result.beta_hat,
            rv_baseline=result.rv_baseline,
            xi=result.xi,
            m=result.m,
            S=result.S,
            flagged_negative=result.flagged_negative,
            truth=path.integrated_vol,
        )

    def run_replication(self, task: Tuple[CellSpec, int]) -> ReplicationOutcome:
        """Run every selected estimator on replication ``task[1]`` of ``task[0]``."""
        cell, replication = task
        seed = child_seed(self.config.master_seed, replication)
        outcome = ReplicationOutcome(cell=cell, replication=replication)
        for name in self.config.estimators:
            try:
                self.nodes[name](cell, seed, outcome)
            except (HFNoiseError, ValueError, ArithmeticError) as exc:
                outcome.failures[name] = f"{type(exc).__name__}: {exc}"
                logger.warning(
                    f"{cell.label} replication {replication}: {name} failed: {exc}"
                )
        self._cache = {}
        return outcome

    def tasks(self) -> List[Tuple[CellSpec, int]]:
        return [
            (cell, replication)
            for cell in self.config.cells()
            for replication in range(self.config.replications)
        ]

    def run(self, workers: Optional[int] = None) -> BenchmarkReport:
        """Run all replications and aggregate them into a report.

        Parameters
        ----------
        workers : int, optional
            Worker processes; defaults to ``config.workers``.

        Returns
        -------
        BenchmarkReport
            Per-cell summaries ordered as ``config.cells()``.
        """
        workers = workers or self.config.workers
        tasks = self.tasks()
        logger.info(
            f"Benchmark: {len(self.config.cells())} cells x "
            f"{self.config.replications} replications on {workers} worker(s)"
        )
        if workers == 1:
            outcomes = [self.run_replication(task) for task in tasks]
        else:
            context = mp.get_context("spawn")
            with ProcessPoolExecutor(
                max_workers=workers, mp_context=context
            ) as executor:
                outcomes = list(
                    executor.map(self.run_replication, tasks, chunksize=4)
                )
        report = summarize(self.config, outcomes)
        logger.info(
            f"Benchmark finished: {report.failures} failures "
            f"in {report.attempts} attempts"
        )
        return report


def run_benchmark(config: BenchmarkConfig) -> BenchmarkReport:
    """Run the benchmark described by ``config``."""
    return BenchmarkRunner(config).run()
