"""Figure use case interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional

from ...api.models.domain.figures import FigureDataset, FigureOptions


class FigureUseCase(ABC):
    """Interface for figure dataset generation."""

    @abstractmethod
    async def run_figure(self, figure_id: str, options: FigureOptions) -> FigureDataset:
        """Sweep the grid of one figure."""
        pass

    @abstractmethod
    async def save_figure(self, dataset: FigureDataset, path: Optional[str] = None) -> Path:
        """Write a figure dataset as CSV."""
        pass
