"""Figure and sweep domain models."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from ...exceptions import ConfigurationError
from ....const import (
    ALPHA_GEOMETRIC,
    DEFAULT_DELTA,
    DEFAULT_SIGMA,
    FIGURE_IDS,
    GAMMA_LEGEND,
    PARAMETER_NAMES,
    STATUS_OK,
    STATUS_SKIPPED,
)

LINEAR = "linear"
LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter sweep with fixed values for the others and a frame policy."""

    parameter: str
    start: float
    stop: float
    points: int
    scale: str = LINEAR
    fixed: Dict[str, float] = field(default_factory=dict)
    alpha_policy: Union[str, float] = ALPHA_GEOMETRIC

    def __post_init__(self) -> None:
        if self.parameter not in PARAMETER_NAMES:
            raise ConfigurationError(f"Unknown sweep parameter: {self.parameter}")
        if self.points < 2:
            raise ConfigurationError("A sweep needs at least 2 points")
        if self.scale not in (LINEAR, LOG):
            raise ConfigurationError(f"Unknown sweep scale: {self.scale}")
        if self.scale == LOG and min(self.start, self.stop) <= 0:
            raise ConfigurationError("Log sweeps need positive endpoints")
        if self.parameter == "q" and not (0.0 <= self.start <= 1.0 and 0.0 <= self.stop <= 1.0):
            raise ConfigurationError("Relative-intensity sweeps must stay inside [0, 1]")

    def grid(self) -> np.ndarray:
        if self.scale == LOG:
            return np.logspace(np.log10(self.start), np.log10(self.stop), self.points)
        return np.linspace(self.start, self.stop, self.points)


@dataclass
class FigureDataset:
    """Rows of one figure with a stable column schema and metadata."""

    figure_id: str
    columns: List[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.figure_id not in FIGURE_IDS:
            raise ConfigurationError(f"Unknown figure id: {self.figure_id}")
        for required in ("status", "reason"):
            if required not in self.columns:
                self.columns.append(required)

    def add_row(self, values: Dict[str, Any]) -> None:
        unknown = set(values) - set(self.columns)
        if unknown:
            raise ValueError(f"Columns not in schema: {sorted(unknown)}")
        row = {column: values.get(column) for column in self.columns}
        row["status"] = row["status"] or STATUS_OK
        row["reason"] = row["reason"] or ""
        self.rows.append(row)

    def add_skipped(self, keys: Dict[str, Any], reason: str) -> None:
        """Record a singular point explicitly instead of dropping it."""
        self.add_row({**keys, "status": STATUS_SKIPPED, "reason": reason})

    @property
    def ok_rows(self) -> List[Dict[str, Any]]:
        return [row for row in self.rows if row["status"] == STATUS_OK]

    @property
    def skipped_rows(self) -> List[Dict[str, Any]]:
        return [row for row in self.rows if row["status"] == STATUS_SKIPPED]

    def column(self, name: str, where: Optional[Dict[str, Any]] = None) -> np.ndarray:
        """Values of one column over ok rows, optionally filtered by equality."""
        rows = self.ok_rows
        if where:
            rows = [r for r in rows if all(np.isclose(r[k], v) for k, v in where.items())]
        return np.array([r[name] for r in rows], dtype=float)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=self.columns)


@dataclass(frozen=True)
class FigureOptions:
    """Settings shared by every figure sweep."""

    sigma: float = DEFAULT_SIGMA
    delta: float = DEFAULT_DELTA
    points: int = 41
    gamma_legend: Tuple[float, ...] = GAMMA_LEGEND
    workers: int = 4

    def __post_init__(self) -> None:
        if self.points < 2:
            raise ConfigurationError("A sweep needs at least 2 points")
        if self.workers < 1:
            raise ConfigurationError("At least one worker is required")
        if any(abs(g) > 1.0 for g in self.gamma_legend):
            raise ConfigurationError(f"Coherence legend must lie in [-1, 1]: {self.gamma_legend}")

    @property
    def figure_unit(self) -> float:
        """delta / (4 sigma^2)."""
        return self.delta / (4.0 * self.sigma**2)
