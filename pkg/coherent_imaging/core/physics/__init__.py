"""Closed-form kernels for the two-source imaging model."""
