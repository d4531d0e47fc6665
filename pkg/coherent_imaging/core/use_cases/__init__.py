"""Use cases for the coherent imaging toolkit."""

from .interfaces import (
    BoundsUseCase,
    FigureUseCase,
    MeasurementUseCase,
    OracleUseCase,
    SimulationUseCase,
    SldUseCase,
    StateUseCase,
    ValidationUseCase,
)

__all__ = [
    "BoundsUseCase",
    "FigureUseCase",
    "MeasurementUseCase",
    "OracleUseCase",
    "SimulationUseCase",
    "SldUseCase",
    "StateUseCase",
    "ValidationUseCase",
]
