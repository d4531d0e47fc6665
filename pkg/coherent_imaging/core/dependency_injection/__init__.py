"""Dependency injection for the coherent imaging toolkit."""

from .container import (
    clear_injector,
    get_dependency,
    get_injector,
    is_injector_ready,
    setup_injector,
)
from .module import CoherentImagingModule
from .providers import (
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

__all__ = [
    "get_injector",
    "is_injector_ready",
    "setup_injector",
    "get_dependency",
    "clear_injector",
    "CoherentImagingModule",
    "setup_dependencies",
    "clear_dependencies",
    "get_state_use_case",
    "get_sld_use_case",
    "get_bounds_use_case",
    "get_measurement_use_case",
    "get_oracle_use_case",
    "get_figure_use_case",
    "get_validation_use_case",
    "get_simulation_use_case",
    "get_dataset_repository",
    "get_scenario_repository",
]
