"""Validation and simulation run models."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..dto.validation_row_dto import ValidationRowDTO
from .measurement import MleResult
from ....const import EXIT_SUCCESS, EXIT_VALIDATION_FAILURE


@dataclass(frozen=True)
class ValidationGridPoint:
    """One point of a validation grid with its frame weight."""

    s: float
    q: float
    gamma_r: float
    gamma_i: float
    alpha: float

    @property
    def label(self) -> str:
        return (
            f"s={self.s:g};q={self.q:g};gr={self.gamma_r:g};"
            f"gi={self.gamma_i:g};alpha={self.alpha:g}"
        )


@dataclass
class ValidationReport:
    """Rows of a validation run and the checks that failed."""

    preset: str
    rows: List[ValidationRowDTO] = field(default_factory=list)
    path: Optional[Path] = None

    @property
    def failures(self) -> List[str]:
        return sorted({row.check for row in self.rows if not row.passed})

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return EXIT_SUCCESS if self.passed else EXIT_VALIDATION_FAILURE

    def rows_for(self, check: str) -> List[ValidationRowDTO]:
        return [row for row in self.rows if row.check == check]

    def dict(self) -> Dict[str, Any]:
        return {
            "preset": self.preset,
            "rows": len(self.rows),
            "failures": self.failures,
            "path": None if self.path is None else str(self.path),
        }


@dataclass
class SimulationSummary:
    """Monte Carlo estimates compared with the van Trees bound."""

    mle: MleResult
    crb: Dict[str, float]
    records_path: Optional[Path] = None
    empirical_fisher: Optional[float] = None

    @property
    def variance_ratio(self) -> Dict[str, float]:
        """Sample variance over the bound, per free parameter."""
        return {
            name: self.mle.sample_variance[name] / self.crb[name]
            for name in self.mle.sample_variance
            if self.crb.get(name)
        }

    def dict(self) -> Dict[str, Any]:
        return {
            **self.mle.dict(),
            "crb": self.crb,
            "variance_ratio": self.variance_ratio,
            "records_path": None if self.records_path is None else str(self.records_path),
            "empirical_fisher": self.empirical_fisher,
        }
