"""Command modules for the CLI."""

from .bound import BoundCommand
from .figure import FigureCommand
from .simulate import SimulateCommand
from .validate import ValidateCommand

__all__ = ["BoundCommand", "FigureCommand", "SimulateCommand", "ValidateCommand"]
