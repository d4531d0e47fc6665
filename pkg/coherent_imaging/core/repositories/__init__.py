"""Repositories package."""

from .interfaces import DatasetRepository, ScenarioRepository
from .implementations import DatasetRepositoryImpl, ScenarioRepositoryImpl

__all__ = [
    "DatasetRepository",
    "ScenarioRepository",
    "DatasetRepositoryImpl",
    "ScenarioRepositoryImpl",
]
