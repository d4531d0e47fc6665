"""SLD use case implementation."""

import logging
from typing import Dict, Tuple

import numpy as np

from ...api.models.domain.operators import BlochOperator, ExtendedOperator
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...physics import sld
from ..interfaces.sld_use_case import SldUseCase

_LOGGER = logging.getLogger(__name__)


class SldUseCaseImpl(SldUseCase):
    """Implementation of the SLD use case."""

    async def get_separation_sld(self, p: ParamPoint, cfg: OpticalConfig) -> ExtendedOperator:
        """Get the 4x4 separation SLD."""
        try:
            return sld.sld_separation(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing separation SLD: %s", e)
            raise

    async def get_scalar_sld(self, p: ParamPoint, cfg: OpticalConfig, which: str) -> BlochOperator:
        """Get the qubit SLD of q, gamma_r or gamma_i."""
        try:
            return sld.sld_scalar(p, cfg, which)

        except Exception as e:
            _LOGGER.error("Error computing SLD for %s: %s", which, e)
            raise

    async def get_qubit_sld(self, p: ParamPoint, cfg: OpticalConfig, basis: str) -> BlochOperator:
        """Get the qubit-model separation SLD in a fixed basis."""
        try:
            return sld.qubit_sld_separation(p, cfg, basis)

        except Exception as e:
            _LOGGER.error("Error computing qubit SLD in %s: %s", basis, e)
            raise

    async def get_slds(self, p: ParamPoint, cfg: OpticalConfig) -> Dict[str, np.ndarray]:
        """Get every SLD as a 4x4 matrix."""
        try:
            return sld.all_slds(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing SLDs: %s", e)
            raise

    async def get_commutator_norms(
        self, p: ParamPoint, cfg: OpticalConfig
    ) -> Dict[Tuple[str, str], Tuple[float, float]]:
        """Get commutator norms and weak-commutativity traces for every pair."""
        try:
            return sld.commutator_norms(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing commutators: %s", e)
            raise
