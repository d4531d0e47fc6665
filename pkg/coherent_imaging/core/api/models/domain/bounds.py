"""Bound domain models for information matrices over theta."""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ....const import PARAMETER_NAMES, PSD_TOL, PURITY_PARAMETER_NAMES, SYMMETRY_TOL


@dataclass(frozen=True)
class BoundMatrix:
    """4x4 real symmetric information or bound matrix over (s, q, gamma_r, gamma_i)."""

    entries: np.ndarray
    kind: str
    names: Tuple[str, ...] = PARAMETER_NAMES

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (len(self.names), len(self.names)):
            raise ValueError(f"Bound matrix must be {len(self.names)}x{len(self.names)}")
        # symmetrize away rounding
        object.__setattr__(self, "entries", 0.5 * (entries + entries.T))

    def entry(self, row: str, col: Optional[str] = None) -> float:
        """Entry by parameter name; diagonal when col is omitted."""
        i = self.names.index(row)
        j = self.names.index(col if col is not None else row)
        return float(self.entries[i, j])

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries).copy()

    def is_symmetric(self, tol: float = SYMMETRY_TOL) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.entries))))
        return bool(np.max(np.abs(self.entries - self.entries.T)) <= tol * scale)

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries).min())

    def is_psd(self, tol: float = PSD_TOL) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.entries))))
        return self.min_eigenvalue() >= -tol * scale

    def in_figure_units(self, delta: float, sigma: float) -> np.ndarray:
        """Entries divided by delta / (4 sigma^2)."""
        return self.entries / (delta / (4.0 * sigma**2))

    def dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "names": list(self.names), "entries": self.entries.tolist()}


@dataclass(frozen=True)
class JacobianMatrix:
    """Derivatives d vartheta_l / d theta_k, rows over theta and columns over (r, q, gamma_r, gamma_i)."""

    entries: np.ndarray
    row_names: Tuple[str, ...] = PARAMETER_NAMES
    col_names: Tuple[str, ...] = PURITY_PARAMETER_NAMES

    @property
    def dr_ds(self) -> float:
        return float(self.entries[0, 0])

    def dict(self) -> Dict[str, Any]:
        return {
            "rows": list(self.row_names),
            "cols": list(self.col_names),
            "entries": self.entries.tolist(),
        }


@dataclass(frozen=True)
class IndirectResult:
    """Purity-route information with its bijectivity diagnostics."""

    bound: Optional[BoundMatrix]
    bijective: bool
    r: float
    r_inf: float
    s0: Optional[float] = None
    jacobian: Optional[JacobianMatrix] = None

    def dict(self) -> Dict[str, Any]:
        return {
            "bound": None if self.bound is None else self.bound.dict(),
            "bijective": self.bijective,
            "r": self.r,
            "r_inf": self.r_inf,
            "s0": self.s0,
        }


@dataclass(frozen=True)
class MisalignmentResult:
    """Error of the separation QFI under a shifted frame, with its fitted order in epsilon."""

    epsilons: np.ndarray
    delta_qfi: np.ndarray
    fitted_order: float

    def dict(self) -> Dict[str, Any]:
        return {
            "epsilons": self.epsilons.tolist(),
            "delta_qfi": self.delta_qfi.tolist(),
            "fitted_order": self.fitted_order,
        }


@dataclass(frozen=True)
class InformationSplit:
    """Quantum (n_bar * QFI) and classical (prior) contributions to the van Trees information."""

    quantum: BoundMatrix
    classical: BoundMatrix

    @property
    def total(self) -> np.ndarray:
        return self.quantum.entries + self.classical.entries
