"""Module for reading and writing estimator inputs and outputs as CSV.

Series are stored as ``time,value``, characteristic functions as
``s,value`` and densities as ``x,fhat``. Floats are written with 17
significant digits so that a save/load cycle is lossless.
"""

from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from hfnoise.core.exceptions import InvalidInputError
from hfnoise.modules.bandwidth.schemas import BandwidthSelection
from hfnoise.modules.density.schemas import DensityEstimate
from hfnoise.modules.ecf.schemas import CharFnEstimate
from hfnoise.modules.simulation.schemas import TickSeries, TimeGrid
from hfnoise.utils.logger import Logger

_logger = None

FLOAT_FORMAT = "%.17g"

PathLike = Union[str, Path]


def _get_logger():
    """Get or create the logger instance (lazy loading).

    Returns
    -------
    logging.Logger
        Logger instance for this module.
    """
    global _logger
    if _logger is None:
        _logger = Logger().get_logger()
    return _logger


class SeriesIO:
    """Loads and saves series, characteristic functions and densities.

    Relative paths are resolved against ``directory``.

    Attributes
    ----------
    directory : Path
        Base directory for relative paths.

    Examples
    --------
    >>> io = SeriesIO("/tmp/run")
    >>> io.save_series(series, "series.csv")
    >>> restored = io.load_series("series.csv")
    """

    def __init__(self, directory: PathLike = "."):
        """Initialize the SeriesIO with a base directory.

        Parameters
        ----------
        directory : str or Path
            Base directory for relative paths; created on first write.
        """
        self.directory = Path(directory)

    def _resolve(self, path: PathLike) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self.directory / path

    def write_frame(self, frame: pd.DataFrame, path: PathLike) -> Path:
        """Write ``frame`` as CSV with 17 significant digits."""
        target = self._resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(target, index=False, float_format=FLOAT_FORMAT)
        _get_logger().info(f"Wrote {len(frame)} rows to {target}")
        return target

    def _read(self, path: PathLike, columns: tuple) -> pd.DataFrame:
        source = self._resolve(path)
        if not source.exists():
            message = f"File not found: {source}"
            _get_logger().error(message)
            raise FileNotFoundError(message)
        frame = pd.read_csv(source, float_precision="round_trip")
        missing = [column for column in columns if column not in frame.columns]
        if missing:
            message = f"{source} lacks columns {missing}"
            _get_logger().error(message)
            raise InvalidInputError(message)
        return frame

    def save_series(self, series: TickSeries, path: PathLike) -> Path:
        """Write a TickSeries as ``time,value``."""
        frame = pd.DataFrame({"time": series.times, "value": series.y})
        return self.write_frame(frame, path)

    def load_series(
        self, path: PathLike, ratio_bound: Optional[float] = None
    ) -> TickSeries:
        """Read a ``time,value`` file back into a TickSeries.

        Parameters
        ----------
        path : str or Path
            CSV file.
        ratio_bound : float, optional
            Spacing-ratio bound attached to the rebuilt grid; None keeps the
            grid unconstrained.

        Returns
        -------
        TickSeries
            Series whose horizon is the last time stamp.
        """
        frame = self._read(path, ("time", "value"))
        times = frame["time"].to_numpy(dtype=float)
        horizon = float(times[-1]) if times.size else 0.0
        grid = TimeGrid(points=times, horizon=horizon, ratio_bound=ratio_bound)
        return TickSeries(grid=grid, y=frame["value"].to_numpy(dtype=float))

    def save_charfn(self, charfn: CharFnEstimate, path: PathLike) -> Path:
        """Write a CharFnEstimate as ``s,value``."""
        frame = pd.DataFrame({"s": charfn.s_grid, "value": charfn.values})
        return self.write_frame(frame, path)

    def save_density(self, density: DensityEstimate, path: PathLike) -> Path:
        """Write a DensityEstimate as ``x,fhat``."""
        frame = pd.DataFrame({"x": density.x_grid, "fhat": density.values})
        return self.write_frame(frame, path)

    def save_ise_surface(self, selection: BandwidthSelection, path: PathLike) -> Path:
        """Write the level-1 ISE surface of a bandwidth selection as ``h,xi,ise``."""
        h_grid = np.asarray(selection.search_grids["h"])
        xi_grid = np.asarray(selection.search_grids["xi"])
        surface = np.asarray(selection.ise_surface)
        hh, xx = np.meshgrid(h_grid, xi_grid, indexing="ij")
        frame = pd.DataFrame(
            {"h": hh.ravel(), "xi": xx.ravel(), "ise": surface.ravel()}
        )
        return self.write_frame(frame, path)
