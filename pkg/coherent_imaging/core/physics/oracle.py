"""Brute-force QFI in a truncated Hermite-Gauss basis.

Independent of the closed forms: the state is assembled from mode expansions,
differentiated by central differences and its SLDs are solved in the
eigenbasis of rho.
"""

import logging
from typing import Dict

import numpy as np
from scipy.linalg import eigh

from ..api.exceptions import InputError, StepSizeError
from ..api.models.domain.bounds import BoundMatrix
from ..api.models.domain.oracle import DenseState
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..const import (
    FD_STEP,
    HERMITIAN_TOL,
    HG_ORDER,
    KERNEL_TOL,
    KIND_NUMERIC_QFI,
    PARAM_S,
    PARAMETER_NAMES,
    RICHARDSON_TOL,
)
from .extended_basis import extended_basis
from .hermite_gauss import source_derivatives, source_expansions
from .sld import sld_separation
from .state import intensity_weight

_LOGGER = logging.getLogger(__name__)

MIN_STEP = 1e-7
MAX_STEP = 1e-4


def dense_state(p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER) -> DenseState:
    """rho in the first ``order`` Hermite-Gauss modes."""
    psi, phi = source_expansions(p, cfg, order)
    g = intensity_weight(p.q)
    gamma = complex(p.gamma_r, p.gamma_i)
    matrix = (
        p.q * np.outer(psi, psi)
        + (1.0 - p.q) * np.outer(phi, phi)
        + g * (gamma * np.outer(psi, phi) + gamma.conjugate() * np.outer(phi, psi))
    )
    return DenseState(matrix=matrix / np.real(np.trace(matrix)))


def _step(which: str, cfg: OpticalConfig, step: float) -> float:
    return step * cfg.sigma if which == PARAM_S else step


def density_derivative(
    p: ParamPoint,
    cfg: OpticalConfig,
    which: str,
    step: float = FD_STEP,
    order: int = HG_ORDER,
) -> np.ndarray:
    """Central-difference d rho / d theta_which."""
    h = _step(which, cfg, step)
    value = getattr(p, which)
    upper = dense_state(p.with_value(which, value + h), cfg, order).matrix
    lower = dense_state(p.with_value(which, value - h), cfg, order).matrix
    return (upper - lower) / (2.0 * h)


def numeric_sld(rho: DenseState, drho: np.ndarray, tol: float = KERNEL_TOL) -> np.ndarray:
    """Solve d rho = (rho L + L rho) / 2 in the eigenbasis of rho, zero on its kernel."""
    drho = np.asarray(drho, dtype=complex)
    if drho.shape != rho.matrix.shape:
        raise InputError(f"Derivative shape {drho.shape} does not match state {rho.matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(drho))))
    if np.max(np.abs(drho - drho.conj().T)) > HERMITIAN_TOL * scale:
        raise InputError("Density-matrix derivative is not Hermitian")
    values, vectors = eigh(0.5 * (rho.matrix + rho.matrix.conj().T))
    sums = values[:, None] + values[None, :]
    rotated = vectors.conj().T @ drho @ vectors
    support = sums > tol * rho.trace
    sld = np.zeros_like(rotated)
    sld[support] = 2.0 * rotated[support] / sums[support]
    return vectors @ sld @ vectors.conj().T


def _qfi_at_step(p: ParamPoint, cfg: OpticalConfig, order: int, step: float) -> np.ndarray:
    rho = dense_state(p, cfg, order)
    slds = [
        numeric_sld(rho, density_derivative(p, cfg, name, step, order)) for name in PARAMETER_NAMES
    ]
    size = len(slds)
    info = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            info[i, j] = info[j, i] = float(np.real(np.trace(rho.matrix @ slds[i] @ slds[j])))
    return info


def numeric_qfi(
    p: ParamPoint,
    cfg: OpticalConfig,
    order: int = HG_ORDER,
    step: float = FD_STEP,
) -> BoundMatrix:
    """QFI matrix from finite differences, checked against a doubled step."""
    if not MIN_STEP <= step <= MAX_STEP:
        raise StepSizeError(f"Step {step} outside [{MIN_STEP}, {MAX_STEP}]")
    fine = _qfi_at_step(p, cfg, order, step)
    coarse = _qfi_at_step(p, cfg, order, 2.0 * step)
    scale = np.sqrt(np.outer(np.abs(np.diag(fine)), np.abs(np.diag(fine))))
    scale = np.maximum(scale, KERNEL_TOL)
    disagreement = float(np.max(np.abs(fine - coarse) / scale))
    if disagreement > RICHARDSON_TOL:
        raise StepSizeError(
            f"Finite differences at step {step} disagree with step {2.0 * step} "
            f"by {disagreement:.3e} at {p}"
        )
    _LOGGER.debug("Numeric QFI at %s, step disagreement %s", p, disagreement)
    return BoundMatrix(entries=fine, kind=KIND_NUMERIC_QFI)


def extended_frame(p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER) -> np.ndarray:
    """Columns hold e1, e2, e3, e4 in the Hermite-Gauss basis.

    The e4 column is zero when the fourth direction is unresolved.
    """
    psi, phi = source_expansions(p, cfg, order)
    dpsi, dphi = source_derivatives(p, cfg, order)
    basis = extended_basis(p, cfg)
    c = float(np.dot(psi, phi))
    n1 = np.sqrt(2.0 * (1.0 - c))
    n2 = np.sqrt(2.0 * (1.0 + c))
    dc = 2.0 * basis.beta
    e1 = (psi - phi) / n1
    e2 = (psi + phi) / n2
    de1 = (dpsi - dphi) / n1 + (psi - phi) * dc / n1**3
    de2 = (dpsi + dphi) / n2 - (psi + phi) * dc / n2**3
    span = np.column_stack([de1, de2, e1, e2])
    e3 = span @ basis.e3_coeffs
    e4 = span @ basis.e4_coeffs if basis.e4_coeffs is not None else np.zeros(order)
    return np.column_stack([e1, e2, e3, e4])


def separation_sld_in_modes(
    p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER
) -> np.ndarray:
    """Closed-form 4x4 separation SLD mapped into the Hermite-Gauss basis."""
    frame = extended_frame(p, cfg, order)
    return frame @ sld_separation(p, cfg).matrix() @ frame.T


def sld_residual(rho: DenseState, drho: np.ndarray, sld: np.ndarray) -> float:
    """Frobenius norm of d rho - (rho L + L rho) / 2."""
    return float(np.linalg.norm(drho - 0.5 * (rho.matrix @ sld + sld @ rho.matrix), "fro"))


def oracle_slds(
    p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER, step: float = FD_STEP
) -> Dict[str, np.ndarray]:
    """Numeric SLDs of every parameter in the Hermite-Gauss basis."""
    rho = dense_state(p, cfg, order)
    return {
        name: numeric_sld(rho, density_derivative(p, cfg, name, step, order))
        for name in PARAMETER_NAMES
    }
