"""Binary SPADE and HG0 measurements: outcome probabilities and Fisher information.

A binary measurement projects on one real fundamental mode |m> and its
complement. Every mode used here is a real combination of Gaussians, so
<m|psi> reduces to Gaussian overlaps exp(-(x_j - x1)^2 / (8 sigma^2)).
"""

import logging
from typing import Tuple

import numpy as np

from ..api.exceptions import DomainError, NumericDegeneracyError
from ..api.models.domain.bounds import BoundMatrix
from ..api.models.domain.measurement import BinaryPOVM
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..const import (
    BASIS_CENTROID,
    BASIS_GEOMETRIC,
    KIND_COUNTING,
    MODE_EXACT,
    MODE_QUBIT_APPROX,
    PARAM_S,
    POVM_HG0_CENTROID,
    POVM_PROJECTOR_E,
    POVM_PROJECTOR_V,
    PROBABILITY_TOL,
)
from .bounds import prior_fisher
from .extended_basis import extended_basis
from .sld import frame_rotation_term, qubit_derivative
from .state import (
    basis_coefficients,
    basis_rotation,
    beta_coefficient,
    bloch_derivative,
    bloch_vector,
    intensity_denominator,
    intensity_weight,
    mean_photon_number,
    overlap_c,
)

_LOGGER = logging.getLogger(__name__)

MISALIGNMENT_SEPARATION = 1e-3


def _projector_basis(povm: BinaryPOVM) -> str:
    return BASIS_CENTROID if povm.kind == POVM_PROJECTOR_V else BASIS_GEOMETRIC


def mode_components(povm: BinaryPOVM, cfg: OpticalConfig) -> Tuple[np.ndarray, np.ndarray]:
    """Centers and weights of the Gaussians making up the measured mode."""
    reference = povm.reference
    if reference is None:
        raise DomainError("Measurement must be anchored at a reference point")
    if povm.is_hg0:
        return np.array([povm.center(cfg.alpha)]), np.array([1.0])
    coefficients = basis_coefficients(reference, cfg, _projector_basis(povm))
    # v1 or e2, both the symmetric fundamental mode
    row = 0 if povm.kind == POVM_PROJECTOR_V else 1
    return np.array(cfg.source_positions(reference.s)), coefficients[row]


def _amplitudes(
    p: ParamPoint, cfg: OpticalConfig, centers: np.ndarray, weights: np.ndarray
) -> Tuple[float, float]:
    x1, x2 = cfg.source_positions(p.s)
    scale = 8.0 * cfg.sigma**2
    a = float(np.sum(weights * np.exp(-((centers - x1) ** 2) / scale)))
    b = float(np.sum(weights * np.exp(-((centers - x2) ** 2) / scale)))
    return a, b


def _mode_probability(p: ParamPoint, a: float, b: float, c: float) -> float:
    g = intensity_weight(p.q)
    numerator = p.q * a * a + (1.0 - p.q) * b * b + 2.0 * g * p.gamma_r * a * b
    return numerator / intensity_denominator(p, c)


def outcome_probabilities(
    p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM
) -> Tuple[float, float]:
    """(p0, p1) at ``p`` for a measurement frozen at its reference point."""
    if povm.reference is None:
        povm = povm.anchored_at(p)
    centers, weights = mode_components(povm, cfg)
    a, b = _amplitudes(p, cfg, centers, weights)
    p0 = float(np.clip(_mode_probability(p, a, b, overlap_c(p.s, cfg.sigma)), 0.0, 1.0))
    return p0, 1.0 - p0


def _mode_bloch_vector(p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM) -> np.ndarray:
    """Bloch vector n of |m><m| in geometric coordinates, so that p0 = (1 + r . n) / 2."""
    column = 0 if povm.kind == POVM_PROJECTOR_V else 1
    m = basis_rotation(p, cfg, _projector_basis(povm))[:, column]
    return np.array([2.0 * m[0] * m[1], 0.0, m[0] ** 2 - m[1] ** 2])


def _projector_derivative(p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM, mode: str) -> float:
    state = bloch_vector(p, cfg)
    if mode == MODE_EXACT:
        nu = extended_basis(p, cfg).nu
        d_vec = bloch_derivative(p, cfg, PARAM_S) + frame_rotation_term(state.r_vec, nu)
    else:
        d_vec = qubit_derivative(p, cfg, _projector_basis(povm))
    return 0.5 * float(np.dot(d_vec, _mode_bloch_vector(p, cfg, povm)))


def _hg0_derivative(p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM, mode: str) -> float:
    alpha = cfg.alpha
    anchored = povm.anchored_at(p)
    x0 = anchored.center(alpha)
    if mode == MODE_EXACT:
        dx0 = 0.0
    elif povm.kind == POVM_HG0_CENTROID:
        dx0 = alpha - p.q
    else:
        dx0 = (2.0 * alpha - 1.0) / 2.0
    x1, x2 = cfg.source_positions(p.s)
    scale = 4.0 * cfg.sigma**2
    c = overlap_c(p.s, cfg.sigma)
    a, b = _amplitudes(p, cfg, np.array([x0]), np.array([1.0]))
    da = -a * (x0 - x1) * (dx0 + (1.0 - alpha)) / scale
    db = -b * (x0 - x2) * (dx0 - alpha) / scale
    g = intensity_weight(p.q)
    denominator = intensity_denominator(p, c)
    d_numerator = (
        2.0 * p.q * a * da
        + 2.0 * (1.0 - p.q) * b * db
        + 2.0 * g * p.gamma_r * (da * b + a * db)
    )
    d_denominator = 4.0 * beta_coefficient(p.s, cfg.sigma) * p.gamma_r * g
    p0 = _mode_probability(p, a, b, c)
    return (d_numerator - p0 * d_denominator) / denominator


def probability_derivative(
    p: ParamPoint, cfg: OpticalConfig, povm: BinaryPOVM, mode: str = MODE_EXACT
) -> float:
    """d p0 / ds with the measurement fixed (exact) or co-moving with s (qubit_approx)."""
    if mode not in (MODE_EXACT, MODE_QUBIT_APPROX):
        raise DomainError(f"Unknown derivative mode: {mode}")
    if povm.is_hg0:
        return _hg0_derivative(p, cfg, povm, mode)
    return _projector_derivative(p, cfg, povm, mode)


def spade_fisher_s(
    p: ParamPoint,
    cfg: OpticalConfig,
    povm: BinaryPOVM,
    mode: str = MODE_EXACT,
    include_prior: bool = False,
) -> float:
    """Per-slot Fisher information on s, n_bar (dp0)^2 / (p0 p1) plus the optional prior term."""
    p0, p1 = outcome_probabilities(p, cfg, povm.anchored_at(p))
    if p0 * p1 <= PROBABILITY_TOL:
        raise NumericDegeneracyError(
            f"Outcome probabilities are degenerate (p0={p0})",
            {"s": p.s, "q": p.q, "gamma_r": p.gamma_r, "gamma_i": p.gamma_i, "povm": povm.kind},
        )
    derivative = probability_derivative(p, cfg, povm, mode)
    fisher = mean_photon_number(p, cfg) * derivative**2 / (p0 * p1)
    if include_prior:
        fisher += prior_fisher(p, cfg).entry(PARAM_S)
    return float(fisher)


def misalignment_relative_difference(
    p: ParamPoint, cfg: OpticalConfig, separation: float = MISALIGNMENT_SEPARATION
) -> float:
    """(F_v - F_e) / F_v for the aligned and geometric binary SPADE at small separation."""
    point = p.with_value(PARAM_S, separation * cfg.sigma)
    aligned = spade_fisher_s(point, cfg, BinaryPOVM(POVM_PROJECTOR_V))
    misaligned = spade_fisher_s(point, cfg, BinaryPOVM(POVM_PROJECTOR_E))
    _LOGGER.debug("Aligned FI %s, misaligned FI %s at %s", aligned, misaligned, point)
    return float((aligned - misaligned) / aligned)


def counting_fisher(p: ParamPoint, cfg: OpticalConfig) -> BoundMatrix:
    """Fisher information of photon counting alone; the Bernoulli arrival statistics."""
    return BoundMatrix(entries=prior_fisher(p, cfg).entries, kind=KIND_COUNTING)
