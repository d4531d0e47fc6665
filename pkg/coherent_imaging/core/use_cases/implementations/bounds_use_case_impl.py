"""Bounds use case implementation."""

import logging
from typing import Optional

from ...api.models.domain.bounds import (
    BoundMatrix,
    IndirectResult,
    InformationSplit,
    MisalignmentResult,
)
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import BASIS_GEOMETRIC
from ...physics import bounds
from ..interfaces.bounds_use_case import BoundsUseCase

_LOGGER = logging.getLogger(__name__)


class BoundsUseCaseImpl(BoundsUseCase):
    """Implementation of the bounds use case."""

    async def get_qfi(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the single-photon QFI matrix."""
        try:
            return bounds.qfi_state_matrix(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing QFI: %s", e)
            raise

    async def get_prior_fisher(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the classical information of the photon arrivals."""
        try:
            return bounds.prior_fisher(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing prior information: %s", e)
            raise

    async def get_van_trees(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the van Trees information."""
        try:
            return bounds.van_trees_info(p, cfg)

        except Exception as e:
            _LOGGER.error("Error computing van Trees information: %s", e)
            raise

    async def get_information_split(self, p: ParamPoint, cfg: OpticalConfig) -> InformationSplit:
        """Get the quantum and classical contributions separately."""
        try:
            return bounds.quantum_and_classical_parts(p, cfg)

        except Exception as e:
            _LOGGER.error("Error splitting information: %s", e)
            raise

    async def get_bmse_bound(self, info: BoundMatrix) -> BoundMatrix:
        """Invert an information matrix."""
        try:
            return bounds.bmse_bound(info)

        except Exception as e:
            _LOGGER.error("Error inverting %s: %s", info.kind, e)
            raise

    async def get_qubit_approx(
        self, p: ParamPoint, cfg: OpticalConfig, basis: str = BASIS_GEOMETRIC
    ) -> BoundMatrix:
        """Get the information with the separation SLD cut to its qubit part."""
        try:
            return bounds.qubit_approx_info(p, cfg, basis)

        except Exception as e:
            _LOGGER.error("Error computing qubit approximation: %s", e)
            raise

    async def get_indirect(
        self, p: ParamPoint, cfg: OpticalConfig, above_r_inf: Optional[bool] = None
    ) -> IndirectResult:
        """Get the information of the purity route."""
        try:
            return bounds.indirect_info(p, cfg, above_r_inf)

        except Exception as e:
            _LOGGER.error("Error computing purity-route information: %s", e)
            raise

    async def get_misalignment_error(
        self, p: ParamPoint, cfg: OpticalConfig, epsilon: float
    ) -> MisalignmentResult:
        """Get the separation QFI error of a shifted frame."""
        try:
            return bounds.centroid_misalignment_error(p, cfg, epsilon)

        except Exception as e:
            _LOGGER.error("Error computing misalignment error: %s", e)
            raise
