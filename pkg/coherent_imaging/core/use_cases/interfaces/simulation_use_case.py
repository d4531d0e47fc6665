"""Simulation use case interface."""

from abc import ABC, abstractmethod
from typing import Optional

from ...api.models.domain.validation import SimulationSummary
from ...api.models.dto.scenario_dto import ScenarioDTO


class SimulationUseCase(ABC):
    """Interface for Monte Carlo estimation runs."""

    @abstractmethod
    async def load_scenario(self, path: str) -> ScenarioDTO:
        """Load a scenario file."""
        pass

    @abstractmethod
    async def run_simulation(
        self, scenario: ScenarioDTO, output: Optional[str] = None
    ) -> SimulationSummary:
        """Simulate, estimate and compare with the bound."""
        pass
