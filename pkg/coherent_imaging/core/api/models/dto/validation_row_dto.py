"""Validation report DTOs."""

from dataclasses import dataclass
from typing import Any, Dict

CSV_COLUMNS = [
    "check",
    "grid_point",
    "entry",
    "closed_form",
    "oracle",
    "rel_error",
    "tolerance",
    "passed",
]


@dataclass
class ValidationRowDTO:
    """One compared value of the validation report."""

    check: str
    grid_point: str
    entry: str
    closed_form: float
    oracle: float
    rel_error: float
    tolerance: float
    passed: bool

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ValidationRowDTO":
        """Create ValidationRowDTO from a CSV row."""
        return cls(
            check=str(data.get("check", "")),
            grid_point=str(data.get("grid_point", "")),
            entry=str(data.get("entry", "")),
            closed_form=float(data.get("closed_form", 0.0)),
            oracle=float(data.get("oracle", 0.0)),
            rel_error=float(data.get("rel_error", 0.0)),
            tolerance=float(data.get("tolerance", 0.0)),
            passed=str(data.get("passed", "")).lower() in ("true", "1"),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a CSV row."""
        return {
            "check": self.check,
            "grid_point": self.grid_point,
            "entry": self.entry,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "rel_error": self.rel_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
