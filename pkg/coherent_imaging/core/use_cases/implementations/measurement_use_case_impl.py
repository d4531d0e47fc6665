"""Measurement use case implementation."""

import logging
from typing import Tuple

from ...api.models.domain.bounds import BoundMatrix
from ...api.models.domain.measurement import BinaryPOVM
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import MODE_EXACT
from ...physics import measurement
from ..interfaces.measurement_use_case import MeasurementUseCase

_LOGGER = logging.getLogger(__name__)


class MeasurementUseCaseImpl(MeasurementUseCase):
    """Implementation of the measurement use case."""

    async def get_outcome_probabilities(
        self, p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM
    ) -> Tuple[float, float]:
        """Get (p0, p1) for a frozen measurement."""
        try:
            return measurement.outcome_probabilities(p, cfg, povm)

        except Exception as e:
            _LOGGER.error("Error computing outcome probabilities: %s", e)
            raise

    async def get_spade_fisher(
        self,
        p: ParamPoint,
        cfg: OpticalConfig,
        povm: BinaryPOVM,
        mode: str = MODE_EXACT,
        include_prior: bool = False,
    ) -> float:
        """Get the Fisher information on the separation."""
        try:
            return measurement.spade_fisher_s(p, cfg, povm, mode, include_prior)

        except Exception as e:
            _LOGGER.error("Error computing %s Fisher information: %s", povm.kind, e)
            raise

    async def get_misalignment_relative_difference(self, p: ParamPoint, cfg: OpticalConfig) -> float:
        """Get (F_v - F_e) / F_v at small separation."""
        try:
            return measurement.misalignment_relative_difference(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing misalignment difference: %s", e)
            raise

    async def get_counting_fisher(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the Fisher information of photon counting."""
        try:
            return measurement.counting_fisher(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing counting information: %s", e)
            raise
