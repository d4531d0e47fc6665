"""Symmetric logarithmic derivatives of the single-photon state.

For rho = (I + r . sigma) / 2 and d rho = (d . sigma) / 2 the SLD is
lam0 I + lam . sigma with lam0 = (r . d) / (r^2 - 1) and lam = d - lam0 r.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from ..api.exceptions import BoundaryError, DomainError, SingularStateError
from ..api.models.domain.operators import BlochOperator, ExtendedOperator
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..api.models.domain.state import BlochState
from ..const import (
    BASIS_CENTROID,
    BASIS_GEOMETRIC,
    PARAM_GAMMA_I,
    PARAM_GAMMA_R,
    PARAM_Q,
    PARAM_S,
    PARAMETER_NAMES,
    PURE_STATE_TOL,
)
from .extended_basis import extended_basis
from .state import bloch_derivative, bloch_vector, centroid_rotation

_LOGGER = logging.getLogger(__name__)

SCALAR_PARAMETERS = (PARAM_Q, PARAM_GAMMA_R, PARAM_GAMMA_I)


def qubit_sld(
    r_vec: np.ndarray, d_vec: np.ndarray, defect: float, basis_tag: str = BASIS_GEOMETRIC
) -> BlochOperator:
    """Solve d rho = (rho L + L rho) / 2 for a qubit with 1 - r^2 = defect."""
    lam0 = -float(np.dot(r_vec, d_vec)) / defect
    return BlochOperator(lam0=lam0, lam_vec=np.asarray(d_vec) - lam0 * r_vec, basis_tag=basis_tag)


def mixed_state(p: ParamPoint, cfg: OpticalConfig) -> BlochState:
    """Bloch state, refusing pure states whose SLDs are undefined."""
    state = bloch_vector(p, cfg)
    if state.is_pure:
        raise SingularStateError(
            f"State is pure at {p} (purity defect {state.purity_defect}); SLDs are undefined"
        )
    return state


def frame_rotation_term(r_vec: np.ndarray, rate: float) -> np.ndarray:
    """Bloch vector of rate * [J, rho] with J = [[0, -1], [1, 0]]."""
    return 2.0 * rate * np.array([r_vec[2], 0.0, -r_vec[0]])


def sld_scalar(p: ParamPoint, cfg: OpticalConfig, which: str) -> BlochOperator:
    """Closed-form SLD for q, gamma_r or gamma_i."""
    if which not in SCALAR_PARAMETERS:
        raise DomainError(f"Scalar SLD is defined for {SCALAR_PARAMETERS}, got {which}")
    if which == PARAM_Q and p.is_boundary_intensity:
        raise BoundaryError(f"SLD for q is undefined at q={p.q}")
    state = mixed_state(p, cfg)
    return qubit_sld(state.r_vec, bloch_derivative(p, cfg, which), state.purity_defect)


def sld_separation(p: ParamPoint, cfg: OpticalConfig) -> ExtendedOperator:
    """4x4 SLD for the separation over {e1, e2, e3, e4}."""
    state = mixed_state(p, cfg)
    qubit_part = qubit_sld(state.r_vec, bloch_derivative(p, cfg, PARAM_S), state.purity_defect)
    return _separation_operator(p, cfg, state.r_vec, qubit_part)


def _separation_operator(
    p: ParamPoint, cfg: OpticalConfig, r_vec: np.ndarray, qubit_part: BlochOperator
) -> ExtendedOperator:
    basis = extended_basis(p, cfg)
    # r . d_ex vanishes identically, so lam0 = 0 and lam = d_ex
    extra = BlochOperator(lam0=0.0, lam_vec=frame_rotation_term(r_vec, basis.nu))

    block_12 = 2.0 * np.array([[basis.a, 0.0], [basis.mu / basis.a, basis.b]], dtype=complex)
    return ExtendedOperator(
        block_11_qb=qubit_part,
        block_11_ex=extra,
        block_12=block_12,
        block_22=np.zeros((2, 2), dtype=complex),
        basis=basis,
    )


def sld_purity(r: float, r_dir: np.ndarray, defect: Optional[float] = None) -> BlochOperator:
    """SLD of the purity: lam0 = -r / (1 - r^2), lam = r_dir / (1 - r^2).

    ``defect`` supplies 1 - r^2 when it is known to better precision than r.
    """
    if defect is None:
        if r >= 1.0 - PURE_STATE_TOL:
            raise SingularStateError(f"Purity SLD diverges at r={r}")
        defect = 1.0 - r * r
    elif not defect > 0.0:
        raise SingularStateError(f"Purity SLD diverges for 1 - r^2 = {defect}")
    if r <= PURE_STATE_TOL:
        raise DomainError(f"Bloch direction is undefined at r={r}")
    direction = np.asarray(r_dir, dtype=float)
    return BlochOperator(lam0=-r / defect, lam_vec=direction / defect)


def qubit_derivative(p: ParamPoint, cfg: OpticalConfig, basis: str) -> np.ndarray:
    """Separation derivative of the Bloch vector with ``basis`` held fixed, in geometric coordinates."""
    d_vec = bloch_derivative(p, cfg, PARAM_S)
    if basis == BASIS_GEOMETRIC:
        return d_vec
    if basis == BASIS_CENTROID:
        _, _, dtheta = centroid_rotation(p, cfg)
        return d_vec - frame_rotation_term(bloch_vector(p, cfg).r_vec, dtheta)
    raise DomainError(f"Unknown basis: {basis}")


def qubit_sld_separation(p: ParamPoint, cfg: OpticalConfig, basis: str) -> BlochOperator:
    """Qubit-model SLD for the separation, ignoring the motion of ``basis``."""
    state = mixed_state(p, cfg)
    return qubit_sld(state.r_vec, qubit_derivative(p, cfg, basis), state.purity_defect, basis)


def embed(operator: np.ndarray) -> np.ndarray:
    """Place a 2x2 operator in the upper-left block of a 4x4 matrix."""
    full = np.zeros((4, 4), dtype=complex)
    full[:2, :2] = operator
    return full


def all_slds(p: ParamPoint, cfg: OpticalConfig) -> Dict[str, np.ndarray]:
    """4x4 matrices of every SLD over {e1, e2, e3, e4}."""
    slds = {PARAM_S: sld_separation(p, cfg).matrix()}
    for name in SCALAR_PARAMETERS:
        slds[name] = embed(sld_scalar(p, cfg, name).matrix())
    return slds


def pure_state_slds(
    p: ParamPoint, cfg: OpticalConfig, names: Tuple[str, ...]
) -> Dict[str, np.ndarray]:
    """4x4 SLDs at a pure point for parameters that keep the state pure.

    Along such directions r . d = 0 and 2 d rho = d . sigma solves the SLD
    equation, so lam0 = 0 and lam = d. Directions that leave the pure surface
    have no finite SLD and must not be passed.
    """
    r_vec = bloch_vector(p, cfg).r_vec
    slds = {}
    for name in names:
        qubit_part = BlochOperator(lam0=0.0, lam_vec=bloch_derivative(p, cfg, name))
        if name == PARAM_S:
            slds[name] = _separation_operator(p, cfg, r_vec, qubit_part).matrix()
        elif name in SCALAR_PARAMETERS:
            slds[name] = embed(qubit_part.matrix())
        else:
            raise DomainError(f"Unknown parameter: {name}")
    return slds


def commutator_norms(
    p: ParamPoint, cfg: OpticalConfig
) -> Dict[Tuple[str, str], Tuple[float, float]]:
    """Frobenius norm of [L_i, L_j] and |tr(rho [L_i, L_j])| for every pair."""
    slds = all_slds(p, cfg)
    rho = embed(bloch_vector(p, cfg).density_matrix())
    results = {}
    for i, first in enumerate(PARAMETER_NAMES):
        for second in PARAMETER_NAMES[i + 1:]:
            commutator = slds[first] @ slds[second] - slds[second] @ slds[first]
            results[(first, second)] = (
                float(np.linalg.norm(commutator, "fro")),
                float(abs(np.trace(rho @ commutator))),
            )
    return results
