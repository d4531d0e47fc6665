"""Dependency injection module for the coherent imaging toolkit."""

import logging
from typing import Optional

from injector import Module, provider, singleton

from ..file_manager import FileManager, get_file_manager
from ..repositories.interfaces.dataset_repository import DatasetRepository
from ..repositories.interfaces.scenario_repository import ScenarioRepository
from ..repositories.implementations.dataset_repository_impl import DatasetRepositoryImpl
from ..repositories.implementations.scenario_repository_impl import ScenarioRepositoryImpl
from ..use_cases.interfaces.bounds_use_case import BoundsUseCase
from ..use_cases.interfaces.figure_use_case import FigureUseCase
from ..use_cases.interfaces.measurement_use_case import MeasurementUseCase
from ..use_cases.interfaces.oracle_use_case import OracleUseCase
from ..use_cases.interfaces.simulation_use_case import SimulationUseCase
from ..use_cases.interfaces.sld_use_case import SldUseCase
from ..use_cases.interfaces.state_use_case import StateUseCase
from ..use_cases.interfaces.validation_use_case import ValidationUseCase
from ..use_cases.implementations.bounds_use_case_impl import BoundsUseCaseImpl
from ..use_cases.implementations.figure_use_case_impl import FigureUseCaseImpl
from ..use_cases.implementations.measurement_use_case_impl import MeasurementUseCaseImpl
from ..use_cases.implementations.oracle_use_case_impl import OracleUseCaseImpl
from ..use_cases.implementations.simulation_use_case_impl import SimulationUseCaseImpl
from ..use_cases.implementations.sld_use_case_impl import SldUseCaseImpl
from ..use_cases.implementations.state_use_case_impl import StateUseCaseImpl
from ..use_cases.implementations.validation_use_case_impl import ValidationUseCaseImpl

logger = logging.getLogger(__name__)


class CoherentImagingModule(Module):
    """Coherent imaging dependency injection module."""

    def __init__(self, file_manager: Optional[FileManager] = None, workers: int = 4):
        """Initialize the module; the global FileManager is used when none is given."""
        self._file_manager = file_manager
        self._workers = workers

    @singleton
    @provider
    def provide_file_manager(self) -> FileManager:
        """Provide FileManager instance."""
        return self._file_manager or get_file_manager()

    @singleton
    @provider
    def provide_dataset_repository(self, file_manager: FileManager) -> DatasetRepository:
        """Provide DatasetRepository instance."""
        return DatasetRepositoryImpl(file_manager)

    @singleton
    @provider
    def provide_scenario_repository(self, file_manager: FileManager) -> ScenarioRepository:
        """Provide ScenarioRepository instance."""
        return ScenarioRepositoryImpl(file_manager)

    @singleton
    @provider
    def provide_state_use_case(self) -> StateUseCase:
        """Provide StateUseCase instance."""
        return StateUseCaseImpl()

    @singleton
    @provider
    def provide_sld_use_case(self) -> SldUseCase:
        """Provide SldUseCase instance."""
        return SldUseCaseImpl()

    @singleton
    @provider
    def provide_bounds_use_case(self) -> BoundsUseCase:
        """Provide BoundsUseCase instance."""
        return BoundsUseCaseImpl()

    @singleton
    @provider
    def provide_measurement_use_case(self) -> MeasurementUseCase:
        """Provide MeasurementUseCase instance."""
        return MeasurementUseCaseImpl()

    @singleton
    @provider
    def provide_oracle_use_case(self) -> OracleUseCase:
        """Provide OracleUseCase instance."""
        return OracleUseCaseImpl()

    @singleton
    @provider
    def provide_figure_use_case(self, dataset_repository: DatasetRepository) -> FigureUseCase:
        """Provide FigureUseCase instance."""
        return FigureUseCaseImpl(dataset_repository)

    @singleton
    @provider
    def provide_validation_use_case(self, dataset_repository: DatasetRepository) -> ValidationUseCase:
        """Provide ValidationUseCase instance."""
        return ValidationUseCaseImpl(dataset_repository, workers=self._workers)

    @singleton
    @provider
    def provide_simulation_use_case(
        self, dataset_repository: DatasetRepository, scenario_repository: ScenarioRepository
    ) -> SimulationUseCase:
        """Provide SimulationUseCase instance."""
        return SimulationUseCaseImpl(dataset_repository, scenario_repository, workers=self._workers)
