"""Oracle use case interface."""

from abc import ABC, abstractmethod
from typing import Dict

import numpy as np

from ...api.models.domain.bounds import BoundMatrix
from ...api.models.domain.oracle import DenseState
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import FD_STEP, HG_ORDER


class OracleUseCase(ABC):
    """Interface for the brute-force Hermite-Gauss QFI."""

    @abstractmethod
    async def get_dense_state(
        self, p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER
    ) -> DenseState:
        """Get the truncated density matrix."""
        pass

    @abstractmethod
    async def get_numeric_qfi(
        self, p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER, step: float = FD_STEP
    ) -> BoundMatrix:
        """Get the finite-difference QFI matrix."""
        pass

    @abstractmethod
    async def get_oracle_slds(
        self, p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER, step: float = FD_STEP
    ) -> Dict[str, np.ndarray]:
        """Get numeric SLDs in the Hermite-Gauss basis."""
        pass
