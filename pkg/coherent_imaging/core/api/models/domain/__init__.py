"""Domain models for the coherent imaging toolkit."""

from .params import OpticalConfig, ParamPoint, resolve_alpha
from .state import BlochState, PurityReport, bloch_matrix
from .operators import BlochOperator, ExtendedBasisData, ExtendedOperator
from .bounds import (
    BoundMatrix,
    IndirectResult,
    InformationSplit,
    JacobianMatrix,
    MisalignmentResult,
)
from .measurement import BinaryPOVM, DetectionRecord, MleResult
from .oracle import DenseState, ModeExpansion
from .figures import FigureDataset, FigureOptions, SweepSpec
from .validation import SimulationSummary, ValidationGridPoint, ValidationReport

__all__ = [
    "OpticalConfig",
    "ParamPoint",
    "resolve_alpha",
    "BlochState",
    "PurityReport",
    "bloch_matrix",
    "BlochOperator",
    "ExtendedBasisData",
    "ExtendedOperator",
    "BoundMatrix",
    "IndirectResult",
    "InformationSplit",
    "JacobianMatrix",
    "MisalignmentResult",
    "BinaryPOVM",
    "DetectionRecord",
    "MleResult",
    "DenseState",
    "ModeExpansion",
    "FigureDataset",
    "FigureOptions",
    "SweepSpec",
    "SimulationSummary",
    "ValidationGridPoint",
    "ValidationReport",
]
