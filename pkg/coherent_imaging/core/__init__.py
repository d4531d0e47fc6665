"""Core functionality for the coherent imaging toolkit."""
