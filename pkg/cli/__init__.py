"""Coherent Imaging CLI - figures, validation and simulations from the command line."""

__version__ = "1.0.0"
