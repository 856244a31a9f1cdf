"""Logging utility module.

This module provides a Logger class for configuring and managing library
logging with both file and console handlers.
"""

import logging
from pathlib import Path
from typing import Optional

from hfnoise.core.config import get_settings


class Logger:
    """Encapsulates logging configuration and provides a logger instance.

    Configures Python logging with both file and console handlers. Logs are
    written to a file in the configured log directory and also output to
    the console. The level comes from ``HFNOISE_LOG_LEVEL``.

    Attributes
    ----------
    log_file : Path
        Path to the log file (default: logs/hfnoise.log).
    logger : logging.Logger
        Configured logger instance.

    Examples
    --------
    >>> logger = Logger()
    >>> log = logger.get_logger()
    >>> log.info("Simulation started")
    """

    def __init__(self, name: str = "hfnoise", log_file: Optional[Path] = None):
        """Initialize the Logger with configuration.

        Parameters
        ----------
        name : str, optional
            Logger name (default: "hfnoise").
        log_file : Path, optional
            Path to log file. If None, uses the settings' log directory and
            file name.
        """
        settings = get_settings()
        log_dir = Path(settings.log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        self.log_file = log_file or (log_dir / settings.log_file)

        logging.basicConfig(
            level=getattr(logging, settings.log_level.upper(), logging.INFO),
            format="[%(asctime)s] %(levelname)s in %(module)s: %(message)s",
            handlers=[logging.FileHandler(self.log_file), logging.StreamHandler()],
        )
        self.logger = logging.getLogger(name)

    def get_logger(self) -> logging.Logger:
        """Get the configured logger instance.

        Returns
        -------
        logging.Logger
            Configured logger instance ready for use.
        """
        return self.logger
