"""Measurement use case interface."""

from abc import ABC, abstractmethod
from typing import Tuple

from ...api.models.domain.bounds import BoundMatrix
from ...api.models.domain.measurement import BinaryPOVM
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import MODE_EXACT


class MeasurementUseCase(ABC):
    """Interface for binary SPADE measurements."""

    @abstractmethod
    async def get_outcome_probabilities(
        self, p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM
    ) -> Tuple[float, float]:
        """Get (p0, p1) for a frozen measurement."""
        pass

    @abstractmethod
    async def get_spade_fisher(
        self,
        p: ParamPoint,
        cfg: OpticalConfig,
        povm: BinaryPOVM,
        mode: str = MODE_EXACT,
        include_prior: bool = False,
    ) -> float:
        """Get the Fisher information on the separation."""
        pass

    @abstractmethod
    async def get_misalignment_relative_difference(self, p: ParamPoint, cfg: OpticalConfig) -> float:
        """Get (F_v - F_e) / F_v at small separation."""
        pass

    @abstractmethod
    async def get_counting_fisher(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the Fisher information of photon counting."""
        pass
