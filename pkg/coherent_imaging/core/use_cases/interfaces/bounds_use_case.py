"""Bounds use case interface."""

from abc import ABC, abstractmethod
from typing import Optional

from ...api.models.domain.bounds import (
    BoundMatrix,
    IndirectResult,
    InformationSplit,
    MisalignmentResult,
)
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import BASIS_GEOMETRIC


class BoundsUseCase(ABC):
    """Interface for information matrices and Bayesian bounds."""

    @abstractmethod
    async def get_qfi(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the single-photon QFI matrix."""
        pass

    @abstractmethod
    async def get_prior_fisher(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the classical information of the photon arrivals."""
        pass

    @abstractmethod
    async def get_van_trees(self, p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
        """Get the van Trees information."""
        pass

    @abstractmethod
    async def get_information_split(self, p: ParamPoint, cfg: OpticalConfig) -> InformationSplit:
        """Get the quantum and classical contributions separately."""
        pass

    @abstractmethod
    async def get_bmse_bound(self, info: BoundMatrix) -> BoundMatrix:
        """Invert an information matrix."""
        pass

    @abstractmethod
    async def get_qubit_approx(
        self, p: ParamPoint, cfg: OpticalConfig, basis: str = BASIS_GEOMETRIC
    ) -> BoundMatrix:
        """Get the information with the separation SLD cut to its qubit part."""
        pass

    @abstractmethod
    async def get_indirect(
        self, p: ParamPoint, cfg: OpticalConfig, above_r_inf: Optional[bool] = None
    ) -> IndirectResult:
        """Get the information of the purity route."""
        pass

    @abstractmethod
    async def get_misalignment_error(
        self, p: ParamPoint, cfg: OpticalConfig, epsilon: float
    ) -> MisalignmentResult:
        """Get the separation QFI error of a shifted frame."""
        pass
