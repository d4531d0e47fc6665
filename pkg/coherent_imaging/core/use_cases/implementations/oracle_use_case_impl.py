"""Oracle use case implementation."""

import logging
from typing import Dict

import numpy as np

from ...api.models.domain.bounds import BoundMatrix
from ...api.models.domain.oracle import DenseState
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import FD_STEP, HG_ORDER
from ...physics import oracle
from ..interfaces.oracle_use_case import OracleUseCase

_LOGGER = logging.getLogger(__name__)


class OracleUseCaseImpl(OracleUseCase):
    """Implementation of the oracle use case."""

    async def get_dense_state(
        self, p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER
    ) -> DenseState:
        """Get the truncated density matrix."""
        try:
            return oracle.dense_state(p, cfg, order)

        except Exception as e:
            _LOGGER.error("Error building dense state: %s", e)
            raise

    async def get_numeric_qfi(
        self, p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER, step: float = FD_STEP
    ) -> BoundMatrix:
        """Get the finite-difference QFI matrix."""
        try:
            return oracle.numeric_qfi(p, cfg, order, step)

        except Exception as e:
            _LOGGER.error("Error computing numeric QFI: %s", e)
            raise

    async def get_oracle_slds(
        self, p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER, step: float = FD_STEP
    ) -> Dict[str, np.ndarray]:
        """Get numeric SLDs in the Hermite-Gauss basis."""
        try:
            return oracle.oracle_slds(p, cfg, order, step)

        except Exception as e:
            _LOGGER.error("Error computing numeric SLDs: %s", e)
            raise
