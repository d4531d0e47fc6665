"""Dataset repository implementation."""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from ...api.exceptions import PersistenceError
from ...api.models.domain.figures import FigureDataset
from ...api.models.domain.measurement import DetectionRecord
from ...api.models.dto.detection_record_dto import CSV_COLUMNS as RECORD_COLUMNS
from ...api.models.dto.detection_record_dto import DetectionRecordDTO
from ...api.models.dto.validation_row_dto import CSV_COLUMNS as VALIDATION_COLUMNS
from ...api.models.dto.validation_row_dto import ValidationRowDTO
from ...file_manager import FileManager
from ..interfaces.dataset_repository import DatasetRepository

_LOGGER = logging.getLogger(__name__)


class DatasetRepositoryImpl(DatasetRepository):
    """CSV persistence through FileManager."""

    def __init__(self, file_manager: FileManager):
        """Initialize the repository with a file manager."""
        self._file_manager = file_manager

    def _write(self, frame: pd.DataFrame, path: str, metadata: Dict[str, Any]) -> Path:
        if not self._file_manager.save_csv(path, frame, metadata):
            raise PersistenceError(f"Could not write {path}")
        return self._file_manager.get_file_path(path)

    async def save_figure(self, dataset: FigureDataset, path: Optional[str] = None) -> Path:
        """Save a figure dataset; defaults to <figure_id>.csv in the data directory."""
        target = path or f"{dataset.figure_id}.csv"
        saved = self._write(dataset.to_frame(), target, dataset.metadata)
        _LOGGER.info("Figure %s saved with %d rows", dataset.figure_id, len(dataset.rows))
        return saved

    async def save_records(
        self, records: List[DetectionRecord], path: str, metadata: Dict[str, Any]
    ) -> Path:
        """Save detection records, one row per trial."""
        frame = pd.DataFrame(
            [record.to_dto().to_dict() for record in records], columns=RECORD_COLUMNS
        )
        frame["seed"] = frame["seed"].astype("Int64")
        return self._write(frame, path, metadata)

    async def load_records(self, path: str) -> List[DetectionRecord]:
        """Load detection records saved by save_records."""
        frame = await self.load_table(path)
        missing = set(RECORD_COLUMNS) - set(frame.columns)
        if missing:
            raise PersistenceError(f"{path} lacks columns {sorted(missing)}")
        rows = frame.astype(object).where(frame.notna(), None).to_dict("records")
        return [DetectionRecord.from_dto(DetectionRecordDTO.from_dict(row)) for row in rows]

    async def save_validation_report(
        self, rows: List[ValidationRowDTO], path: str, metadata: Dict[str, Any]
    ) -> Path:
        """Save the validation report."""
        frame = pd.DataFrame([row.to_dict() for row in rows], columns=VALIDATION_COLUMNS)
        return self._write(frame, path, metadata)

    async def save_table(self, frame: pd.DataFrame, path: str, metadata: Dict[str, Any]) -> Path:
        """Save an arbitrary table with metadata lines."""
        return self._write(frame, path, metadata)

    async def load_table(self, path: str) -> pd.DataFrame:
        """Load a table saved by this repository."""
        frame = self._file_manager.load_csv(path)
        if frame is None:
            raise PersistenceError(f"Could not read {path}")
        return frame
