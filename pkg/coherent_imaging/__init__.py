"""Coherent imaging precision-limit toolkit."""

__version__ = "1.0.0"
