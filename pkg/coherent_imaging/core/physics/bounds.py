"""Information matrices over theta = (s, q, gamma_r, gamma_i)."""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from ..api.exceptions import (
    DegeneratePriorError,
    DomainError,
    NonBijectiveError,
    SingularJacobianError,
    SingularStateError,
)
from ..api.models.domain.bounds import (
    BoundMatrix,
    IndirectResult,
    InformationSplit,
    JacobianMatrix,
    MisalignmentResult,
)
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..const import (
    BASIS_GEOMETRIC,
    BOUNDARY_MARGIN,
    BOUNDARY_OFFSET,
    BOUNDARY_OFFSET_GROWTHS,
    COHERENCE_OFFSET,
    KERNEL_TOL,
    KIND_BMSE,
    KIND_INDIRECT,
    KIND_PRIOR_FI,
    KIND_QFI_STATE,
    KIND_QUBIT_APPROX,
    KIND_VAN_TREES,
    PARAM_GAMMA_I,
    PARAM_GAMMA_R,
    PARAM_Q,
    PARAM_S,
    PARAMETER_NAMES,
    PROBABILITY_TOL,
    PURE_STATE_TOL,
    PURITY_PARAMETER_NAMES,
)
from ..utils.fitting import fitted_slope, log_grid
from .sld import (
    all_slds,
    embed,
    mixed_state,
    pure_state_slds,
    qubit_sld_separation,
    sld_purity,
)
from .state import (
    bijectivity_point,
    bloch_derivative,
    bloch_vector,
    mean_photon_gradient,
    mean_photon_number,
    purity,
)

_LOGGER = logging.getLogger(__name__)

MISALIGNMENT_SEPARATION = 1e-4
MISALIGNMENT_POINTS = 6


def information_matrix(
    rho: np.ndarray, slds: Dict[str, np.ndarray], names: Tuple[str, ...] = PARAMETER_NAMES
) -> np.ndarray:
    """Re tr[rho L_i L_j] over ``names``."""
    ops = [slds[name] for name in names]
    size = len(ops)
    info = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            info[i, j] = info[j, i] = float(np.real(np.trace(rho @ ops[i] @ ops[j])))
    return info


def _interior_qfi(p: ParamPoint, cfg: OpticalConfig) -> np.ndarray:
    state = mixed_state(p, cfg)
    return information_matrix(embed(state.density_matrix()), all_slds(p, cfg))


def _offset_point(p: ParamPoint, scale: float) -> ParamPoint:
    """Move a boundary point ``scale`` base offsets into the interior."""
    point = p
    if p.q == 0.0:
        point = point.with_value(PARAM_Q, scale * BOUNDARY_OFFSET)
    elif p.q == 1.0:
        point = point.with_value(PARAM_Q, 1.0 - scale * BOUNDARY_OFFSET)
    if p.is_fully_coherent:
        shrink = (1.0 - scale * COHERENCE_OFFSET) / np.sqrt(p.gamma_abs_sq)
        point = ParamPoint(point.s, point.q, p.gamma_r * shrink, p.gamma_i * shrink)
    return point


def resolvable_offset_point(p: ParamPoint, cfg: OpticalConfig) -> ParamPoint:
    """Nearest offset point whose coherence defect clears the pure-state tolerance."""
    scale = 1.0
    for _ in range(BOUNDARY_OFFSET_GROWTHS):
        point = _offset_point(p, scale)
        if bloch_vector(point, cfg).coherence_defect > BOUNDARY_MARGIN * PURE_STATE_TOL:
            return point
        scale *= 10.0
    raise SingularStateError(f"No resolvable mixed state near the boundary point {p}")


def boundary_tangents(p: ParamPoint) -> Tuple[str, ...]:
    """Parameters whose variation keeps a boundary state pure.

    The coherence defect is proportional to q (1 - q) (1 - |gamma|^2); a
    parameter is tangent when its derivative of that product vanishes.
    """
    names = [PARAM_S]
    if not p.is_boundary_intensity:
        names.append(PARAM_Q)
    if p.is_boundary_intensity or p.gamma_r == 0.0:
        names.append(PARAM_GAMMA_R)
    if p.is_boundary_intensity or p.gamma_i == 0.0:
        names.append(PARAM_GAMMA_I)
    return tuple(names)


def boundary_limit(p: ParamPoint, cfg: OpticalConfig, kind: str = KIND_QFI_STATE) -> BoundMatrix:
    """QFI at q in {0, 1} or |gamma| = 1.

    Entries between tangent parameters are the exact pure-state values at
    ``p``. Entries touching a parameter that leaves the pure surface grow
    without bound at the boundary and are reported at the nearest resolvable
    interior point.
    """
    entries = _interior_qfi(resolvable_offset_point(p, cfg), cfg)
    tangents = boundary_tangents(p)
    rho = embed(bloch_vector(p, cfg).density_matrix())
    exact = information_matrix(rho, pure_state_slds(p, cfg, tangents), tangents)
    index = [PARAMETER_NAMES.index(name) for name in tangents]
    entries[np.ix_(index, index)] = exact
    _LOGGER.debug("Boundary limit at %s: exact block over %s", p, tangents)
    return BoundMatrix(entries=entries, kind=kind)


def qfi_state_matrix(p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
    """Single-photon QFI matrix Re tr[rho L_i L_j]."""
    if p.is_boundary_intensity or p.is_fully_coherent:
        _LOGGER.debug("Evaluating QFI at %s as a boundary limit", p)
        return boundary_limit(p, cfg, KIND_QFI_STATE)
    return BoundMatrix(entries=_interior_qfi(p, cfg), kind=KIND_QFI_STATE)


def prior_fisher(p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
    """Bernoulli Fisher information of photon arrival, d n_bar d n_bar^T / (n_bar (1 - n_bar))."""
    n_bar = mean_photon_number(p, cfg)
    variance = n_bar * (1.0 - n_bar)
    if variance <= PROBABILITY_TOL:
        raise DegeneratePriorError(f"Photon-arrival probability n_bar={n_bar} is degenerate at {p}")
    gradient = mean_photon_gradient(p, cfg)
    return BoundMatrix(entries=np.outer(gradient, gradient) / variance, kind=KIND_PRIOR_FI)


def quantum_and_classical_parts(p: ParamPoint, cfg: OpticalConfig) -> InformationSplit:
    """n_bar * QFI and the prior Fisher matrix, kept apart."""
    n_bar = mean_photon_number(p, cfg)
    quantum = qfi_state_matrix(p, cfg)
    return InformationSplit(
        quantum=BoundMatrix(entries=n_bar * quantum.entries, kind=KIND_QFI_STATE),
        classical=prior_fisher(p, cfg),
    )


def van_trees_info(p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
    """Information matrix n_bar QFI + prior whose inverse bounds the Bayesian MSE."""
    split = quantum_and_classical_parts(p, cfg)
    return BoundMatrix(entries=split.total, kind=KIND_VAN_TREES)


def qubit_approx_info(
    p: ParamPoint, cfg: OpticalConfig, basis: str = BASIS_GEOMETRIC
) -> BoundMatrix:
    """van Trees information with the separation SLD truncated to its qubit part in ``basis``."""
    state = mixed_state(p, cfg)
    slds = all_slds(p, cfg)
    slds[PARAM_S] = embed(qubit_sld_separation(p, cfg, basis).matrix())
    info = state.n_bar * information_matrix(embed(state.density_matrix()), slds)
    return BoundMatrix(entries=info + prior_fisher(p, cfg).entries, kind=KIND_QUBIT_APPROX)


def centroid_misalignment_error(
    p: ParamPoint,
    cfg: OpticalConfig,
    epsilon: float,
    separation: float = MISALIGNMENT_SEPARATION,
    points: int = MISALIGNMENT_POINTS,
) -> MisalignmentResult:
    """Separation QFI error when the frame weight is q + eps instead of q.

    Evaluated at a small separation over the decade of eps ending at ``epsilon``.
    """
    if not 0.0 <= p.q + epsilon <= 1.0:
        raise DomainError(f"Shifted frame weight q + eps = {p.q + epsilon} is outside [0, 1]")
    point = p.with_value(PARAM_S, separation * cfg.sigma)
    reference = qfi_state_matrix(point, cfg.with_alpha(p.q)).entry(PARAM_S)
    epsilons = log_grid(abs(epsilon) / 10.0, abs(epsilon), points) * np.sign(epsilon)
    errors = np.array(
        [
            abs(qfi_state_matrix(point, cfg.with_alpha(p.q + eps)).entry(PARAM_S) - reference)
            for eps in epsilons
        ]
    )
    return MisalignmentResult(
        epsilons=np.abs(epsilons),
        delta_qfi=errors,
        fitted_order=fitted_slope(np.abs(epsilons), errors),
    )


def _purity_route_slds(p: ParamPoint, cfg: OpticalConfig) -> Dict[str, np.ndarray]:
    """SLDs over (r, q, gamma_r, gamma_i) with the purity SLD standing in for d/dr."""
    state = mixed_state(p, cfg)
    direction = state.direction
    dr_ds = float(np.dot(direction, bloch_derivative(p, cfg, PARAM_S)))
    slds = all_slds(p, cfg)
    radial = embed(sld_purity(state.purity, direction, state.purity_defect).matrix())
    route = {PURITY_PARAMETER_NAMES[0]: radial}
    for name in PARAMETER_NAMES[1:]:
        dr_dk = float(np.dot(direction, bloch_derivative(p, cfg, name)))
        # d/d theta_k at fixed r
        route[name] = slds[name] - (dr_dk / dr_ds) * slds[PARAM_S]
    return route


def purity_jacobian(p: ParamPoint, cfg: OpticalConfig) -> JacobianMatrix:
    """K = d vartheta / d theta, rows over theta and columns over (r, q, gamma_r, gamma_i)."""
    state = mixed_state(p, cfg)
    direction = state.direction
    d_s = bloch_derivative(p, cfg, PARAM_S)
    dr_ds = float(np.dot(direction, d_s))
    if abs(dr_ds) <= KERNEL_TOL * max(float(np.linalg.norm(d_s)), KERNEL_TOL):
        raise SingularJacobianError(f"Purity is stationary in s at {p} (dr/ds={dr_ds})")
    entries = np.eye(len(PARAMETER_NAMES))
    for k, name in enumerate(PARAMETER_NAMES):
        entries[k, 0] = float(np.dot(direction, bloch_derivative(p, cfg, name)))
    return JacobianMatrix(entries=entries)


def indirect_info(
    p: ParamPoint, cfg: OpticalConfig, above_r_inf: Optional[bool] = None
) -> IndirectResult:
    """van Trees information when the separation is read out through the purity.

    For gamma_r < 0 the purity has a minimum at s0 and the route is only usable
    when the caller asserts r > r_inf; the assertion is checked.
    """
    report = purity(p, cfg)
    s0 = bijectivity_point(p, cfg.sigma)
    bijective = s0 is None
    if not bijective:
        if not above_r_inf:
            raise NonBijectiveError(
                f"Purity is not monotone in s for gamma_r={p.gamma_r}; minimum at s0={s0}",
                s0=s0,
            )
        if report.r <= report.r_inf:
            raise NonBijectiveError(
                f"Asserted r > r_inf does not hold: r={report.r}, r_inf={report.r_inf}", s0=s0
            )

    jacobian = purity_jacobian(p, cfg)
    state = mixed_state(p, cfg)
    route = _purity_route_slds(p, cfg)
    rho = embed(state.density_matrix())
    ops = [route[name] for name in (PURITY_PARAMETER_NAMES[0],) + PARAMETER_NAMES[1:]]
    info_route = np.array(
        [[float(np.real(np.trace(rho @ a @ b))) for b in ops] for a in ops]
    )
    info = state.n_bar * jacobian.entries @ info_route @ jacobian.entries.T
    bound = BoundMatrix(entries=info + prior_fisher(p, cfg).entries, kind=KIND_INDIRECT)
    return IndirectResult(
        bound=bound,
        bijective=bijective,
        r=report.r,
        r_inf=report.r_inf,
        s0=s0,
        jacobian=jacobian,
    )


def bmse_bound(info: BoundMatrix) -> BoundMatrix:
    """Inverse of an information matrix; pseudo-inverse when it is rank deficient."""
    entries = info.entries
    scale = max(float(np.max(np.abs(entries))), KERNEL_TOL)
    rank = np.linalg.matrix_rank(entries, tol=KERNEL_TOL * scale, hermitian=True)
    if rank < entries.shape[0]:
        _LOGGER.debug("Information matrix has rank %s; using pseudo-inverse", rank)
        inverse = np.linalg.pinv(entries, rcond=KERNEL_TOL, hermitian=True)
    else:
        inverse = np.linalg.inv(entries)
    return BoundMatrix(entries=inverse, kind=KIND_BMSE, names=info.names)
