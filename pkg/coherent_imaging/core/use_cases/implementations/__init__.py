"""Use case implementations for the coherent imaging toolkit."""

from .bounds_use_case_impl import BoundsUseCaseImpl
from .figure_use_case_impl import FigureUseCaseImpl
from .measurement_use_case_impl import MeasurementUseCaseImpl
from .oracle_use_case_impl import OracleUseCaseImpl
from .simulation_use_case_impl import SimulationUseCaseImpl
from .sld_use_case_impl import SldUseCaseImpl
from .state_use_case_impl import StateUseCaseImpl
from .validation_use_case_impl import ValidationUseCaseImpl

__all__ = [
    "BoundsUseCaseImpl",
    "FigureUseCaseImpl",
    "MeasurementUseCaseImpl",
    "OracleUseCaseImpl",
    "SimulationUseCaseImpl",
    "SldUseCaseImpl",
    "StateUseCaseImpl",
    "ValidationUseCaseImpl",
]
