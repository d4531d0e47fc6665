"""Qubit state domain models."""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ....const import BASIS_GEOMETRIC, PURE_STATE_TOL

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (PAULI_X, PAULI_Y, PAULI_Z)


def bloch_matrix(scalar: float, vector: np.ndarray) -> np.ndarray:
    """Assemble scalar * I + vector . sigma."""
    return scalar * np.eye(2, dtype=complex) + sum(v * p for v, p in zip(vector, PAULI))


@dataclass(frozen=True)
class BlochState:
    """Single-photon state rho = (I + r . sigma) / 2 in a fixed two-mode basis."""

    r_vec: np.ndarray
    c: float
    n_bar: float
    purity_defect: float
    coherence_defect: float = 1.0
    basis_tag: str = BASIS_GEOMETRIC

    @property
    def purity(self) -> float:
        """Bloch-vector norm r."""
        return float(np.linalg.norm(self.r_vec))

    @property
    def is_pure(self) -> bool:
        """Pure when q is in {0, 1} or |gamma| = 1.

        The test uses the separation-independent factor 4 q(1-q)(1-|gamma|^2) / D^2
        of 1 - r^2, so vanishing separations are not mistaken for pure states.
        """
        return self.coherence_defect <= PURE_STATE_TOL or self.purity_defect <= 0.0

    @property
    def direction(self) -> np.ndarray:
        return self.r_vec / self.purity

    def density_matrix(self) -> np.ndarray:
        return 0.5 * bloch_matrix(1.0, self.r_vec)

    def dict(self) -> Dict[str, Any]:
        return {
            "r_vec": self.r_vec.tolist(),
            "c": self.c,
            "n_bar": self.n_bar,
            "purity": self.purity,
            "purity_defect": self.purity_defect,
            "basis_tag": self.basis_tag,
        }


@dataclass(frozen=True)
class PurityReport:
    """Purity r together with its incoherent and large-separation references."""

    r: float
    r_inc: float
    r_inf: float
    defect: float
    s0: Optional[float] = None

    @property
    def bijective(self) -> bool:
        """True when r(s) is monotone (gamma_r >= 0)."""
        return self.s0 is None

    def dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "r_inc": self.r_inc,
            "r_inf": self.r_inf,
            "defect": self.defect,
            "s0": self.s0,
        }
