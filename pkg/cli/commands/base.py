"""Base command class for the CLI."""

import logging
from abc import ABC, abstractmethod
from typing import Optional

from coherent_imaging.core.api.exceptions import (
    CoherentImagingError,
    ConfigurationError,
    DomainError,
    InputError,
    ScenarioParseError,
)
from coherent_imaging.core.config_manager import ConfigManager, get_config_manager
from coherent_imaging.core.const import EXIT_USAGE_ERROR, EXIT_VALIDATION_FAILURE
from coherent_imaging.core.dependency_injection.container import is_injector_ready
from coherent_imaging.core.dependency_injection.providers import (
    get_bounds_use_case,
    get_figure_use_case,
    get_measurement_use_case,
    get_oracle_use_case,
    get_simulation_use_case,
    get_sld_use_case,
    get_state_use_case,
    get_validation_use_case,
    setup_dependencies,
)
from coherent_imaging.core.file_manager import FileManager
from coherent_imaging.core.log_manager import LogManager, get_log_manager

from ..utils.display import print_error

logger = logging.getLogger(__name__)

USAGE_ERRORS = (ConfigurationError, DomainError, InputError, ScenarioParseError)


class BaseCommand(ABC):
    """Base class for all CLI commands."""

    def __init__(self, file_manager: Optional[FileManager] = None):
        self.file_manager = file_manager
        self.config_manager: Optional[ConfigManager] = None
        self.log_manager: Optional[LogManager] = None
        self.bounds_use_case = None
        self.figure_use_case = None
        self.validation_use_case = None
        self.simulation_use_case = None
        self.state_use_case = None
        self.sld_use_case = None
        self.measurement_use_case = None
        self.oracle_use_case = None

    async def setup(self) -> bool:
        """Load configuration and resolve use cases."""
        try:
            if self.file_manager is not None:
                self.config_manager = ConfigManager(self.file_manager)
                self.log_manager = LogManager(self.file_manager)
            else:
                self.config_manager = get_config_manager()
                self.log_manager = get_log_manager()

            if not is_injector_ready():
                workers = self.config_manager.get_setting("figures.workers", 4)
                setup_dependencies(file_manager=self.file_manager, workers=workers)

            self.bounds_use_case = get_bounds_use_case()
            self.figure_use_case = get_figure_use_case()
            self.validation_use_case = get_validation_use_case()
            self.simulation_use_case = get_simulation_use_case()
            self.state_use_case = get_state_use_case()
            self.sld_use_case = get_sld_use_case()
            self.measurement_use_case = get_measurement_use_case()
            self.oracle_use_case = get_oracle_use_case()
            return True

        except Exception as e:
            print_error(f"Error setting up command: {e}")
            return False

    @abstractmethod
    async def execute(self, *args, **kwargs) -> int:
        """Execute the command and return its exit code."""
        pass

    @property
    def log_runs(self) -> bool:
        """Whether runs are recorded in the persistent event log."""
        if self.config_manager is None or self.log_manager is None:
            return False
        return bool(self.config_manager.get_setting("log_runs", True))

    def fail(self, error: CoherentImagingError, context: str) -> int:
        """Report an error and map it to an exit code."""
        print_error(f"{context}: {error}")
        if self.log_runs:
            self.log_manager.log_error(type(error).__name__, context, error)
        if isinstance(error, USAGE_ERRORS):
            return EXIT_USAGE_ERROR
        return EXIT_VALIDATION_FAILURE
