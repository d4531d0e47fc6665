"""Detection record DTOs for CSV persistence."""

from dataclasses import dataclass
from typing import Any, Dict, Optional

CSV_COLUMNS = ["trial", "slots", "n_vacuum", "n_out0", "n_out1", "seed"]


@dataclass
class DetectionRecordDTO:
    """Detection record DTO, one CSV row per trial."""

    trial: int
    slots: int
    n_vacuum: int
    n_out0: int
    n_out1: int
    seed: Optional[int] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DetectionRecordDTO":
        """Create DetectionRecordDTO from a CSV row."""
        seed = data.get("seed")
        return cls(
            trial=int(data.get("trial", 0)),
            slots=int(data.get("slots", 0)),
            n_vacuum=int(data.get("n_vacuum", 0)),
            n_out0=int(data.get("n_out0", 0)),
            n_out1=int(data.get("n_out1", 0)),
            seed=None if seed in (None, "") else int(seed),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a CSV row."""
        return {
            "trial": self.trial,
            "slots": self.slots,
            "n_vacuum": self.n_vacuum,
            "n_out0": self.n_out0,
            "n_out1": self.n_out1,
            "seed": self.seed,
        }
