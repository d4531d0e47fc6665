"""State use case interface."""

from abc import ABC, abstractmethod
from typing import Sequence

import numpy as np
import pandas as pd

from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...api.models.domain.state import BlochState, PurityReport


class StateUseCase(ABC):
    """Interface for the single-photon state model."""

    @abstractmethod
    async def get_state(self, p: ParamPoint, cfg: OpticalConfig) -> BlochState:
        """Get the Bloch state and mean photon number."""
        pass

    @abstractmethod
    async def get_density_matrix(self, p: ParamPoint, cfg: OpticalConfig) -> np.ndarray:
        """Get the 2x2 density matrix in the geometric basis."""
        pass

    @abstractmethod
    async def get_purity(self, p: ParamPoint, cfg: OpticalConfig) -> PurityReport:
        """Get the purity with its references and bijectivity point."""
        pass

    @abstractmethod
    async def purity_curve(
        self, p: ParamPoint, cfg: OpticalConfig, s_values: Sequence[float]
    ) -> pd.DataFrame:
        """Purity along a separation grid, columns s, r, r_inf, r_inc."""
        pass

    @abstractmethod
    async def separation_from_purity(self, r: float, p: ParamPoint, cfg: OpticalConfig) -> float:
        """Invert the purity for the separation."""
        pass
