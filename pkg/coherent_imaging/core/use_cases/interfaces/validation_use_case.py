"""Validation use case interface."""

from abc import ABC, abstractmethod
from typing import Optional

from ...api.models.domain.validation import ValidationReport
from ...const import PRESET_DEFAULT


class ValidationUseCase(ABC):
    """Interface for cross-checking closed forms against the oracle."""

    @abstractmethod
    async def run_validation(
        self, preset: str = PRESET_DEFAULT, output: Optional[str] = None
    ) -> ValidationReport:
        """Run the oracle, residual and commutator checks of a preset."""
        pass
