"""Log-log fitting helpers for scaling checks."""

from typing import Sequence

import numpy as np


def fitted_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log|y| against log x."""
    x = np.log(np.asarray(xs, dtype=float))
    y = np.log(np.abs(np.asarray(ys, dtype=float)))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def log_grid(start: float, stop: float, points: int) -> np.ndarray:
    """Logarithmically spaced grid between two positive endpoints."""
    return np.logspace(np.log10(start), np.log10(stop), points)
