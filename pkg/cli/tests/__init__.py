"""Tests for the Coherent Imaging CLI."""

__version__ = "1.0.0"
