"""Use case interfaces for the coherent imaging toolkit."""

from .bounds_use_case import BoundsUseCase
from .figure_use_case import FigureUseCase
from .measurement_use_case import MeasurementUseCase
from .oracle_use_case import OracleUseCase
from .simulation_use_case import SimulationUseCase
from .sld_use_case import SldUseCase
from .state_use_case import StateUseCase
from .validation_use_case import ValidationUseCase

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
