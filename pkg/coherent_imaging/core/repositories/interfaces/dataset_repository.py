"""Dataset repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from ...api.models.domain.figures import FigureDataset
from ...api.models.domain.measurement import DetectionRecord
from ...api.models.dto.validation_row_dto import ValidationRowDTO


class DatasetRepository(ABC):
    """Interface for CSV dataset persistence."""

    @abstractmethod
    async def save_figure(self, dataset: FigureDataset, path: Optional[str] = None) -> Path:
        """Save a figure dataset; defaults to <figure_id>.csv in the data directory."""
        pass

    @abstractmethod
    async def save_records(
        self, records: List[DetectionRecord], path: str, metadata: Dict[str, Any]
    ) -> Path:
        """Save detection records, one row per trial."""
        pass

    @abstractmethod
    async def load_records(self, path: str) -> List[DetectionRecord]:
        """Load detection records saved by save_records."""
        pass

    @abstractmethod
    async def save_validation_report(
        self, rows: List[ValidationRowDTO], path: str, metadata: Dict[str, Any]
    ) -> Path:
        """Save the validation report."""
        pass

    @abstractmethod
    async def save_table(self, frame: pd.DataFrame, path: str, metadata: Dict[str, Any]) -> Path:
        """Save an arbitrary table with metadata lines."""
        pass

    @abstractmethod
    async def load_table(self, path: str) -> pd.DataFrame:
        """Load a table saved by this repository."""
        pass
