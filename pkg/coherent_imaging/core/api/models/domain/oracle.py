"""Oracle domain models: truncated Hermite-Gauss expansions and dense states."""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from ...exceptions import InputError


@dataclass(frozen=True)
class ModeExpansion:
    """Amplitudes of a displaced Gaussian over the first N Hermite-Gauss modes."""

    center: float
    order: int
    coeffs: np.ndarray

    @property
    def norm_sq(self) -> float:
        return float(np.dot(self.coeffs, self.coeffs))

    @property
    def truncation_error(self) -> float:
        return max(0.0, 1.0 - self.norm_sq)

    def overlap(self, other: "ModeExpansion") -> float:
        return float(np.dot(self.coeffs, other.coeffs))

    def dict(self) -> Dict[str, Any]:
        return {"center": self.center, "order": self.order, "coeffs": self.coeffs.tolist()}


@dataclass(frozen=True)
class DenseState:
    """Density matrix in a truncated mode basis."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InputError("Dense state must be a square matrix")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(0.5 * (self.matrix + self.matrix.conj().T))

    def is_physical(self, tol: float = 1e-12) -> bool:
        """Hermitian, unit trace and PSD within tol."""
        hermitian = np.max(np.abs(self.matrix - self.matrix.conj().T)) <= tol
        return bool(hermitian and abs(self.trace - 1.0) <= tol and self.eigenvalues().min() >= -tol)
