"""Scenario repository interface."""

from abc import ABC, abstractmethod

from ...api.models.dto.scenario_dto import ScenarioDTO


class ScenarioRepository(ABC):
    """Interface for simulation scenario files."""

    @abstractmethod
    async def load_scenario(self, path: str) -> ScenarioDTO:
        """Load and validate a scenario file."""
        pass

    @abstractmethod
    def parse_scenario(self, text: str) -> ScenarioDTO:
        """Parse scenario text with [section] headers and key = value lines."""
        pass
