"""Command-line interface of hfnoise."""
