"""Operator domain models: qubit SLDs and the extended-basis separation SLD."""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from .state import bloch_matrix
from ....const import BASIS_GEOMETRIC


@dataclass(frozen=True)
class BlochOperator:
    """Hermitian 2x2 operator lam0 * I + lam_vec . sigma."""

    lam0: float
    lam_vec: np.ndarray
    basis_tag: str = BASIS_GEOMETRIC

    def matrix(self) -> np.ndarray:
        return bloch_matrix(self.lam0, self.lam_vec)

    def __add__(self, other: "BlochOperator") -> "BlochOperator":
        return BlochOperator(
            lam0=self.lam0 + other.lam0,
            lam_vec=self.lam_vec + other.lam_vec,
            basis_tag=self.basis_tag,
        )

    def scaled(self, factor: float) -> "BlochOperator":
        return BlochOperator(self.lam0 * factor, self.lam_vec * factor, self.basis_tag)

    def dict(self) -> Dict[str, Any]:
        return {
            "lam0": self.lam0,
            "lam_vec": self.lam_vec.tolist(),
            "basis_tag": self.basis_tag,
        }


@dataclass(frozen=True)
class ExtendedBasisData:
    """Gram-Schmidt constants of the span {e1, e2, d_s e1, d_s e2}.

    e3_coeffs and e4_coeffs expand |e3>, |e4> over (|d_s e1>, |d_s e2>, |e1>, |e2>).
    e4_coeffs is None when the fourth direction is below numerical resolution
    (tiny separations away from the geometric frame).
    """

    beta: float
    zeta: float
    omega1_sq: float
    omega2_sq: float
    mu: float
    nu: float
    a: float
    b: float
    e3_coeffs: np.ndarray
    e4_coeffs: Optional[np.ndarray]

    @property
    def derivative_frame(self) -> np.ndarray:
        """Components of (d_s e1, d_s e2) over (e1, e2, e3, e4), one column each."""
        return np.array(
            [
                [0.0, -self.nu],
                [self.nu, 0.0],
                [self.a, self.mu / self.a],
                [0.0, self.b],
            ]
        )

    def dict(self) -> Dict[str, Any]:
        return {
            "beta": self.beta,
            "zeta": self.zeta,
            "omega1_sq": self.omega1_sq,
            "omega2_sq": self.omega2_sq,
            "mu": self.mu,
            "nu": self.nu,
            "e3_coeffs": self.e3_coeffs.tolist(),
            "e4_coeffs": None if self.e4_coeffs is None else self.e4_coeffs.tolist(),
        }


@dataclass(frozen=True)
class ExtendedOperator:
    """4x4 Hermitian operator over {e1, e2, e3, e4} with named 2x2 blocks."""

    block_11_qb: BlochOperator
    block_11_ex: BlochOperator
    block_12: np.ndarray
    block_22: np.ndarray
    basis: ExtendedBasisData

    @property
    def block_11(self) -> BlochOperator:
        return self.block_11_qb + self.block_11_ex

    def matrix(self) -> np.ndarray:
        full = np.zeros((4, 4), dtype=complex)
        full[:2, :2] = self.block_11.matrix()
        full[:2, 2:] = self.block_12
        full[2:, :2] = self.block_12.conj().T
        full[2:, 2:] = self.block_22
        return full

    def dict(self) -> Dict[str, Any]:
        return {
            "block_11_qb": self.block_11_qb.dict(),
            "block_11_ex": self.block_11_ex.dict(),
            "block_12": np.real(self.block_12).tolist(),
            "block_22": np.real(self.block_22).tolist(),
            "basis": self.basis.dict(),
        }
