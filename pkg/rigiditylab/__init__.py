"""Exact rigidity-transfer toolkit."""

__version__ = "0.1.0"
