"""Repository implementations for the coherent imaging toolkit."""

from .dataset_repository_impl import DatasetRepositoryImpl
from .scenario_repository_impl import ScenarioRepositoryImpl

__all__ = [
    "DatasetRepositoryImpl",
    "ScenarioRepositoryImpl",
]
