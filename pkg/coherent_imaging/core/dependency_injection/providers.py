"""Dependency injection providers for the coherent imaging toolkit."""

import logging
from typing import Optional

from .container import clear_injector, get_dependency, setup_injector
from .module import CoherentImagingModule
from ..file_manager import FileManager
from ..repositories.interfaces.dataset_repository import DatasetRepository
from ..repositories.interfaces.scenario_repository import ScenarioRepository
from ..use_cases.interfaces.bounds_use_case import BoundsUseCase
from ..use_cases.interfaces.figure_use_case import FigureUseCase
from ..use_cases.interfaces.measurement_use_case import MeasurementUseCase
from ..use_cases.interfaces.oracle_use_case import OracleUseCase
from ..use_cases.interfaces.simulation_use_case import SimulationUseCase
from ..use_cases.interfaces.sld_use_case import SldUseCase
from ..use_cases.interfaces.state_use_case import StateUseCase
from ..use_cases.interfaces.validation_use_case import ValidationUseCase

logger = logging.getLogger(__name__)


def setup_dependencies(file_manager: Optional[FileManager] = None, workers: int = 4) -> None:
    """Set up all dependencies for the coherent imaging toolkit."""
    logger.info("Setting up coherent imaging dependencies")

    module = CoherentImagingModule(file_manager=file_manager, workers=workers)

    setup_injector(module)
    logger.info("Coherent imaging dependencies setup completed")


def get_state_use_case() -> StateUseCase:
    """Get the state use case."""
    return get_dependency(StateUseCase)


def get_sld_use_case() -> SldUseCase:
    """Get the SLD use case."""
    return get_dependency(SldUseCase)


def get_bounds_use_case() -> BoundsUseCase:
    """Get the bounds use case."""
    return get_dependency(BoundsUseCase)


def get_measurement_use_case() -> MeasurementUseCase:
    """Get the measurement use case."""
    return get_dependency(MeasurementUseCase)


def get_oracle_use_case() -> OracleUseCase:
    """Get the oracle use case."""
    return get_dependency(OracleUseCase)


def get_figure_use_case() -> FigureUseCase:
    """Get the figure use case."""
    return get_dependency(FigureUseCase)


def get_validation_use_case() -> ValidationUseCase:
    """Get the validation use case."""
    return get_dependency(ValidationUseCase)


def get_simulation_use_case() -> SimulationUseCase:
    """Get the simulation use case."""
    return get_dependency(SimulationUseCase)


def get_dataset_repository() -> DatasetRepository:
    """Get the dataset repository."""
    return get_dependency(DatasetRepository)


def get_scenario_repository() -> ScenarioRepository:
    """Get the scenario repository."""
    return get_dependency(ScenarioRepository)


def clear_dependencies() -> None:
    """Clear all registered dependencies."""
    clear_injector()
    logger.info("Coherent imaging dependencies cleared")
