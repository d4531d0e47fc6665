"""SLD use case interface."""

from abc import ABC, abstractmethod
from typing import Dict, Tuple

import numpy as np

from ...api.models.domain.operators import BlochOperator, ExtendedOperator
from ...api.models.domain.params import OpticalConfig, ParamPoint


class SldUseCase(ABC):
    """Interface for symmetric logarithmic derivatives."""

    @abstractmethod
    async def get_separation_sld(self, p: ParamPoint, cfg: OpticalConfig) -> ExtendedOperator:
        """Get the 4x4 separation SLD."""
        pass

    @abstractmethod
    async def get_scalar_sld(self, p: ParamPoint, cfg: OpticalConfig, which: str) -> BlochOperator:
        """Get the qubit SLD of q, gamma_r or gamma_i."""
        pass

    @abstractmethod
    async def get_qubit_sld(self, p: ParamPoint, cfg: OpticalConfig, basis: str) -> BlochOperator:
        """Get the qubit-model separation SLD in a fixed basis."""
        pass

    @abstractmethod
    async def get_slds(self, p: ParamPoint, cfg: OpticalConfig) -> Dict[str, np.ndarray]:
        """Get every SLD as a 4x4 matrix."""
        pass

    @abstractmethod
    async def get_commutator_norms(
        self, p: ParamPoint, cfg: OpticalConfig
    ) -> Dict[Tuple[str, str], Tuple[float, float]]:
        """Get commutator norms and weak-commutativity traces for every pair."""
        pass
