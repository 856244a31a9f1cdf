"""Frequency-domain analysis of noisy high-frequency observations."""

__version__ = "0.1.0"
