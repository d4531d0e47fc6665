"""Measurement domain models."""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ...exceptions import ConfigurationError
from .params import ParamPoint
from ..dto.detection_record_dto import DetectionRecordDTO
from ....const import POVM_HG0_CENTROID, POVM_HG0_GEOMETRIC, POVM_KINDS


@dataclass(frozen=True)
class BinaryPOVM:
    """Binary measurement {|m><m|, I - |m><m|} on a fundamental mode m.

    The mode is built at ``reference`` and then held fixed; ``None`` means it is
    rebuilt at the point being evaluated.
    """

    kind: str
    reference: Optional[ParamPoint] = None

    def __post_init__(self) -> None:
        if self.kind not in POVM_KINDS:
            raise ConfigurationError(f"Unknown measurement kind: {self.kind}")

    @property
    def is_hg0(self) -> bool:
        return self.kind in (POVM_HG0_CENTROID, POVM_HG0_GEOMETRIC)

    def anchored_at(self, p: ParamPoint) -> "BinaryPOVM":
        return BinaryPOVM(kind=self.kind, reference=p)

    def center(self, alpha: float) -> Optional[float]:
        """Center of the HG0 mode in the frame of weight alpha."""
        if not self.is_hg0 or self.reference is None:
            return None
        p = self.reference
        if self.kind == POVM_HG0_CENTROID:
            return p.s * (alpha - p.q)
        return p.s * (2.0 * alpha - 1.0) / 2.0


@dataclass(frozen=True)
class DetectionRecord:
    """Counts of one trial over {vacuum, outcome 0, outcome 1}."""

    slot_count: int
    n_vacuum: int
    n_out0: int
    n_out1: int
    trial: int = 0
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if min(self.n_vacuum, self.n_out0, self.n_out1) < 0:
            raise ValueError("Counts must be non-negative")
        if self.n_vacuum + self.n_out0 + self.n_out1 != self.slot_count:
            raise ValueError(
                f"Counts {self.counts} do not sum to slot_count={self.slot_count}"
            )

    @property
    def counts(self) -> np.ndarray:
        return np.array([self.n_vacuum, self.n_out0, self.n_out1], dtype=np.int64)

    @property
    def photons(self) -> int:
        return self.n_out0 + self.n_out1

    def merge(self, other: "DetectionRecord") -> "DetectionRecord":
        """Pool two records; associative and order independent."""
        return DetectionRecord(
            slot_count=self.slot_count + other.slot_count,
            n_vacuum=self.n_vacuum + other.n_vacuum,
            n_out0=self.n_out0 + other.n_out0,
            n_out1=self.n_out1 + other.n_out1,
            trial=min(self.trial, other.trial),
            seed=None,
        )

    @classmethod
    def from_dto(cls, dto: DetectionRecordDTO) -> "DetectionRecord":
        """Create DetectionRecord from DTO."""
        return cls(
            slot_count=dto.slots,
            n_vacuum=dto.n_vacuum,
            n_out0=dto.n_out0,
            n_out1=dto.n_out1,
            trial=dto.trial,
            seed=dto.seed,
        )

    def to_dto(self) -> DetectionRecordDTO:
        """Convert to DTO."""
        return DetectionRecordDTO(
            trial=self.trial,
            slots=self.slot_count,
            n_vacuum=self.n_vacuum,
            n_out0=self.n_out0,
            n_out1=self.n_out1,
            seed=self.seed,
        )

    def dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class MleResult:
    """Maximum-likelihood estimates over repeated trials."""

    theta_hat: Dict[str, float]
    sample_variance: Dict[str, float]
    estimates: Dict[str, List[float]] = field(default_factory=dict)

    @property
    def n_trials(self) -> int:
        values: Sequence[List[float]] = list(self.estimates.values())
        return len(values[0]) if values else 0

    def dict(self) -> Dict[str, Any]:
        return {
            "theta_hat": self.theta_hat,
            "sample_variance": self.sample_variance,
            "n_trials": self.n_trials,
        }
