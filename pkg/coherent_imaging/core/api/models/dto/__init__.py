"""Data Transfer Objects for file I/O."""

from .scenario_dto import SCENARIO_SCHEMA, ScenarioDTO
from .detection_record_dto import DetectionRecordDTO
from .validation_row_dto import ValidationRowDTO

__all__ = [
    "SCENARIO_SCHEMA",
    "ScenarioDTO",
    "DetectionRecordDTO",
    "ValidationRowDTO",
]
