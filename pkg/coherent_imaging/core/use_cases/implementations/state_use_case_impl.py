"""State use case implementation."""

import logging
from typing import Sequence

import numpy as np
import pandas as pd

from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...api.models.domain.state import BlochState, PurityReport
from ...const import PARAM_S
from ...physics import state as state_model
from ..interfaces.state_use_case import StateUseCase

_LOGGER = logging.getLogger(__name__)


class StateUseCaseImpl(StateUseCase):
    """Implementation of the state use case."""

    async def get_state(self, p: ParamPoint, cfg: OpticalConfig) -> BlochState:
        """Get the Bloch state and mean photon number."""
        try:
            return state_model.bloch_vector(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing Bloch state: %s", e)
            raise

    async def get_density_matrix(self, p: ParamPoint, cfg: OpticalConfig) -> np.ndarray:
        """Get the 2x2 density matrix in the geometric basis."""
        try:
            return state_model.density_matrix(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing density matrix: %s", e)
            raise

    async def get_purity(self, p: ParamPoint, cfg: OpticalConfig) -> PurityReport:
        """Get the purity with its references and bijectivity point."""
        try:
            return state_model.purity(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing purity: %s", e)
            raise

    async def purity_curve(
        self, p: ParamPoint, cfg: OpticalConfig, s_values: Sequence[float]
    ) -> pd.DataFrame:
        """Purity along a separation grid, columns s, r, r_inf, r_inc."""
        try:
            rows = []
            for s in s_values:
                report = state_model.purity(p.with_value(PARAM_S, s), cfg)
                rows.append({"s": float(s), "r": report.r, "r_inf": report.r_inf, "r_inc": report.r_inc})
            _LOGGER.debug("Purity curve with %s points at %s", len(rows), p)
            return pd.DataFrame(rows, columns=["s", "r", "r_inf", "r_inc"])

        except Exception as e:
            _LOGGER.error("Error computing purity curve: %s", e)
            raise

    async def separation_from_purity(self, r: float, p: ParamPoint, cfg: OpticalConfig) -> float:
        """Invert the purity for the separation."""
        try:
            return state_model.separation_from_purity(r, p, cfg)

        except Exception as e:
            _LOGGER.error("Error inverting purity %s: %s", r, e)
            raise
