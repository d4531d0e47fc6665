"""Numeric models and errors."""
