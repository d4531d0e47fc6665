"""Custom exceptions for the coherent imaging toolkit."""

from typing import Any, Dict, Iterable, Optional


class CoherentImagingError(Exception):
    """Base exception for coherent imaging errors."""


class DomainError(CoherentImagingError):
    """Parameter outside its physical domain."""


class ConfigurationError(CoherentImagingError):
    """Optical configuration or settings are invalid."""


class DegenerateStateError(CoherentImagingError):
    """Zero-intensity point, no photon ever arrives."""


class DegenerateOverlapError(CoherentImagingError):
    """Point spread functions are indistinguishable (c = 1)."""


class SingularStateError(CoherentImagingError):
    """Density matrix is pure and its SLDs are undefined."""


class BoundaryError(CoherentImagingError):
    """Closed form undefined at q in {0, 1}."""


class NumericDegeneracyError(CoherentImagingError):
    """A norm or probability is numerically degenerate at the evaluated point."""

    def __init__(self, message: str, parameters: Optional[Dict[str, Any]] = None):
        self.parameters = parameters or {}
        if self.parameters:
            details = ", ".join(f"{k}={v!r}" for k, v in self.parameters.items())
            message = f"{message} ({details})"
        super().__init__(message)


class DegeneratePriorError(CoherentImagingError):
    """Photon-arrival probability is 0 or 1."""


class DerivativeDivergenceError(CoherentImagingError):
    """A parameter derivative is unbounded at this point."""


class NonBijectiveError(CoherentImagingError):
    """The separation-purity map is not invertible."""

    def __init__(self, message: str, s0: Optional[float] = None):
        self.s0 = s0
        super().__init__(message)


class SingularJacobianError(CoherentImagingError):
    """Purity is stationary in the separation."""


class InputError(CoherentImagingError):
    """Operator input is malformed (e.g. not Hermitian)."""


class StepSizeError(CoherentImagingError):
    """Finite-difference step is rounding dominated."""


class TruncationWarning(UserWarning):
    """Hermite-Gauss truncation lost more weight than requested."""


class EstimationError(CoherentImagingError):
    """Likelihood is flat in the free parameters."""


class ScenarioParseError(CoherentImagingError):
    """Scenario file could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ValidationFailure(CoherentImagingError):
    """One or more validation invariants failed."""

    def __init__(self, failures: Iterable[str]):
        self.failures = list(failures)
        super().__init__("Validation failed: " + ", ".join(self.failures))


class PersistenceError(CoherentImagingError):
    """A dataset could not be written or read."""
