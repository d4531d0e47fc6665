"""Repository interfaces for the coherent imaging toolkit."""

from .dataset_repository import DatasetRepository
from .scenario_repository import ScenarioRepository

__all__ = [
    "DatasetRepository",
    "ScenarioRepository",
]
