"""Unit tests for dependency injection system."""

from unittest.mock import Mock, patch

import pytest
from injector import Module, provider, singleton

from coherent_imaging.core.dependency_injection.container import (
    clear_injector,
    get_dependency,
    get_injector,
    is_injector_ready,
    setup_injector,
)
from coherent_imaging.core.dependency_injection.module import CoherentImagingModule
from coherent_imaging.core.dependency_injection.providers import (
    clear_dependencies,
    get_bounds_use_case,
    get_dataset_repository,
    get_figure_use_case,
    get_measurement_use_case,
    get_oracle_use_case,
    get_scenario_repository,
    get_simulation_use_case,
    get_sld_use_case,
    get_state_use_case,
    get_validation_use_case,
    setup_dependencies,
)
from coherent_imaging.core.file_manager import FileManager
from coherent_imaging.core.repositories.implementations.dataset_repository_impl import (
    DatasetRepositoryImpl,
)
from coherent_imaging.core.repositories.interfaces.dataset_repository import DatasetRepository
from coherent_imaging.core.use_cases.implementations.figure_use_case_impl import FigureUseCaseImpl
from coherent_imaging.core.use_cases.implementations.simulation_use_case_impl import (
    SimulationUseCaseImpl,
)
from coherent_imaging.core.use_cases.implementations.validation_use_case_impl import (
    ValidationUseCaseImpl,
)


@pytest.mark.unit
class TestDependencyInjectionContainer:
    """Test dependency injection container."""

    def setup_method(self):
        clear_injector()

    def teardown_method(self):
        clear_injector()

    def test_get_injector_not_setup(self):
        assert is_injector_ready() is False
        with pytest.raises(RuntimeError, match="Injector not setup"):
            get_injector()

    def test_setup_needs_a_module(self):
        with pytest.raises(ValueError):
            setup_injector()

    def test_get_dependency_uses_injector(self):
        mock_instance = Mock()
        with patch("coherent_imaging.core.dependency_injection.container.Injector") as injector_class:
            injector_class.return_value.get.return_value = mock_instance

            setup_injector(Mock())
            result = get_dependency(DatasetRepository)

        assert result is mock_instance
        injector_class.return_value.get.assert_called_once_with(DatasetRepository)

    def test_later_module_overrides_binding(self, tmp_path):
        stub = Mock(spec=DatasetRepository)

        class StubModule(Module):
            @singleton
            @provider
            def provide_dataset_repository(self) -> DatasetRepository:
                return stub

        setup_injector(CoherentImagingModule(FileManager(data_dir=tmp_path)), StubModule())

        assert get_dependency(DatasetRepository) is stub

    def test_clear_injector(self, tmp_path):
        setup_injector(CoherentImagingModule(FileManager(data_dir=tmp_path)))
        assert is_injector_ready()

        clear_injector()

        assert not is_injector_ready()


@pytest.mark.unit
class TestDependencyProviders:
    """Test the provider functions over the real module."""

    @pytest.fixture(autouse=True)
    def dependencies(self, tmp_path):
        self.file_manager = FileManager(data_dir=tmp_path)
        setup_dependencies(self.file_manager, workers=2)
        yield
        clear_dependencies()

    def test_every_interface_resolves(self):
        for getter in (
            get_state_use_case,
            get_sld_use_case,
            get_bounds_use_case,
            get_measurement_use_case,
            get_oracle_use_case,
            get_figure_use_case,
            get_validation_use_case,
            get_simulation_use_case,
            get_scenario_repository,
        ):
            assert getter() is not None

    def test_singletons_share_the_repository(self):
        repository = get_dataset_repository()

        figure = get_figure_use_case()
        simulation = get_simulation_use_case()

        assert isinstance(repository, DatasetRepositoryImpl)
        assert isinstance(figure, FigureUseCaseImpl)
        assert isinstance(simulation, SimulationUseCaseImpl)
        assert figure.dataset_repository is repository
        assert simulation.dataset_repository is repository
        assert get_figure_use_case() is figure

    def test_workers_and_file_manager_are_passed(self):
        validation = get_validation_use_case()

        assert isinstance(validation, ValidationUseCaseImpl)
        assert validation._workers == 2
        assert get_dataset_repository()._file_manager is self.file_manager
