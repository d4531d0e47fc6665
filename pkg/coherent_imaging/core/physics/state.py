"""Closed-form single-photon state of two partially coherent Gaussian sources.

Everything is expressed in the geometric basis
e1 = (psi - phi) / sqrt(2(1 - c)), e2 = (psi + phi) / sqrt(2(1 + c)),
with rho = (I + r . sigma) / 2. Small-separation quantities use expm1 so that
1 - c and 1 - c^2 keep full relative precision.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from ..api.exceptions import (
    BoundaryError,
    ConfigurationError,
    DegenerateOverlapError,
    DegenerateStateError,
    DerivativeDivergenceError,
    DomainError,
    NonBijectiveError,
)
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..api.models.domain.state import BlochState, PurityReport
from ..const import (
    BASIS_CENTROID,
    BASIS_GEOMETRIC,
    DENOMINATOR_TOL,
    OVERLAP_TOL,
    PARAM_GAMMA_I,
    PARAM_GAMMA_R,
    PARAM_Q,
    PARAM_S,
    PHOTON_NUMBER_CLAMP,
    PURITY_BRACKET,
    PURITY_XTOL,
)

_LOGGER = logging.getLogger(__name__)


def overlap_exponent(s: float, sigma: float) -> float:
    """t = s^2 / (8 sigma^2), so that c = exp(-t)."""
    if not sigma > 0:
        raise DomainError(f"PSF width must be positive, got sigma={sigma}")
    if s < 0:
        raise DomainError(f"Separation must be non-negative, got s={s}")
    return s * s / (8.0 * sigma * sigma)


def overlap_c(s: float, sigma: float) -> float:
    """Overlap <psi|phi> = exp(-s^2 / (8 sigma^2))."""
    return float(np.exp(-overlap_exponent(s, sigma)))


def overlap_defects(s: float, sigma: float) -> Tuple[float, float]:
    """(1 - c, 1 - c^2) without cancellation."""
    t = overlap_exponent(s, sigma)
    return float(-np.expm1(-t)), float(-np.expm1(-2.0 * t))


def beta_coefficient(s: float, sigma: float) -> float:
    """beta = -s c / (8 sigma^2); dc/ds = 2 beta."""
    return -s * overlap_c(s, sigma) / (8.0 * sigma**2)


def intensity_weight(q: float) -> float:
    """sqrt(q (1 - q))."""
    return float(np.sqrt(q * (1.0 - q)))


def intensity_denominator(p: ParamPoint, c: float) -> float:
    """1 + 2 c gamma_r sqrt(q (1 - q))."""
    return 1.0 + 2.0 * c * p.gamma_r * intensity_weight(p.q)


def mean_photon_number(p: ParamPoint, cfg: OpticalConfig) -> float:
    """n_bar = delta (1 + 2 c gamma_r sqrt(q (1 - q)))."""
    n_bar = cfg.delta * intensity_denominator(p, overlap_c(p.s, cfg.sigma))
    # clamp rounding below zero at the fully destructive point
    if -PHOTON_NUMBER_CLAMP < n_bar < 0.0:
        n_bar = 0.0
    if not 0.0 <= n_bar <= 1.0:
        raise ConfigurationError(
            f"Mean photon number {n_bar} outside [0, 1]; delta={cfg.delta} is too large"
        )
    return float(n_bar)


def mean_photon_gradient(p: ParamPoint, cfg: OpticalConfig) -> np.ndarray:
    """Gradient of n_bar over (s, q, gamma_r, gamma_i)."""
    c = overlap_c(p.s, cfg.sigma)
    g = intensity_weight(p.q)
    beta = beta_coefficient(p.s, cfg.sigma)
    if g == 0.0:
        if p.gamma_r != 0.0:
            raise DerivativeDivergenceError(
                f"d n_bar / d q diverges at q={p.q} with gamma_r={p.gamma_r}"
            )
        dq = 0.0
    else:
        dq = c * p.gamma_r * (1.0 - 2.0 * p.q) / g
    return cfg.delta * np.array([4.0 * p.gamma_r * g * beta, dq, 2.0 * c * g, 0.0])


def _checked_denominator(p: ParamPoint, c: float) -> float:
    denominator = intensity_denominator(p, c)
    if denominator <= DENOMINATOR_TOL:
        raise DegenerateStateError(
            f"Zero-intensity point: 1 + 2c gamma_r sqrt(q(1-q)) = {denominator} at {p}"
        )
    return denominator


def bloch_vector(p: ParamPoint, cfg: OpticalConfig) -> BlochState:
    """Bloch vector of rho in the geometric basis."""
    c = overlap_c(p.s, cfg.sigma)
    _, m2 = overlap_defects(p.s, cfg.sigma)
    g = intensity_weight(p.q)
    denominator = _checked_denominator(p, c)
    root = np.sqrt(m2)
    r_vec = -np.array(
        [
            (1.0 - 2.0 * p.q) * root,
            2.0 * p.gamma_i * g * root,
            c + 2.0 * p.gamma_r * g,
        ]
    ) / denominator
    coherence_defect = 4.0 * g * g * max(0.0, 1.0 - p.gamma_abs_sq) / denominator**2
    defect = coherence_defect * m2
    return BlochState(
        r_vec=r_vec,
        c=c,
        n_bar=mean_photon_number(p, cfg),
        purity_defect=float(defect),
        coherence_defect=float(coherence_defect),
        basis_tag=BASIS_GEOMETRIC,
    )


def density_matrix(p: ParamPoint, cfg: OpticalConfig) -> np.ndarray:
    """2x2 single-photon density matrix in the geometric basis."""
    return bloch_vector(p, cfg).density_matrix()


def bijectivity_point(p: ParamPoint, sigma: float) -> Optional[float]:
    """Separation s0 of the purity minimum, or None when r(s) is monotone."""
    if p.gamma_r >= 0.0:
        return None
    c0 = -2.0 * p.gamma_r * intensity_weight(p.q)
    if c0 <= 0.0:
        return None
    if c0 >= 1.0:
        return 0.0
    return float(sigma * np.sqrt(-8.0 * np.log(c0)))


def purity(p: ParamPoint, cfg: OpticalConfig) -> PurityReport:
    """Purity r with r_inc, r_inf and the location of any minimum."""
    state = bloch_vector(p, cfg)
    _, m2 = overlap_defects(p.s, cfg.sigma)
    g2 = p.q * (1.0 - p.q)
    r_inc_sq = 1.0 - 4.0 * g2 * m2
    r_inf_sq = 1.0 + 4.0 * g2 * (p.gamma_abs_sq - 1.0)
    return PurityReport(
        r=state.purity,
        r_inc=float(np.sqrt(max(0.0, r_inc_sq))),
        r_inf=float(np.sqrt(max(0.0, r_inf_sq))),
        defect=state.purity_defect,
        s0=bijectivity_point(p, cfg.sigma),
    )


def bloch_derivative(p: ParamPoint, cfg: OpticalConfig, which: str) -> np.ndarray:
    """Derivative of the closed-form Bloch vector along one parameter.

    With r = -u / D this is -(du + r dD) / D.
    """
    c = overlap_c(p.s, cfg.sigma)
    _, m2 = overlap_defects(p.s, cfg.sigma)
    g = intensity_weight(p.q)
    denominator = _checked_denominator(p, c)
    root = np.sqrt(m2)
    r_vec = bloch_vector(p, cfg).r_vec

    if which == PARAM_GAMMA_I:
        du = np.array([0.0, 2.0 * g * root, 0.0])
        d_den = 0.0
    elif which == PARAM_GAMMA_R:
        du = np.array([0.0, 0.0, 2.0 * g])
        d_den = 2.0 * c * g
    elif which == PARAM_Q:
        if g == 0.0:
            raise BoundaryError(f"Bloch derivative in q is undefined at q={p.q}")
        dg = (1.0 - 2.0 * p.q) / (2.0 * g)
        du = np.array(
            [-2.0 * root, 2.0 * p.gamma_i * dg * root, 2.0 * p.gamma_r * dg]
        )
        d_den = 2.0 * c * p.gamma_r * dg
    elif which == PARAM_S:
        if root == 0.0:
            raise DegenerateOverlapError("Separation derivative needs s > 0")
        dc = 2.0 * beta_coefficient(p.s, cfg.sigma)
        droot = p.s * c * c / (4.0 * cfg.sigma**2 * root)
        du = np.array(
            [(1.0 - 2.0 * p.q) * droot, 2.0 * p.gamma_i * g * droot, dc]
        )
        d_den = 2.0 * dc * p.gamma_r * g
    else:
        raise DomainError(f"Unknown parameter: {which}")

    return -(du + r_vec * d_den) / denominator


def require_distinct(p: ParamPoint, cfg: OpticalConfig) -> Tuple[float, float, float]:
    """(c, 1 - c, 1 - c^2), refusing separations where the two PSFs coincide."""
    c = overlap_c(p.s, cfg.sigma)
    m1, m2 = overlap_defects(p.s, cfg.sigma)
    if c >= 1.0 - OVERLAP_TOL:
        raise DegenerateOverlapError(f"PSFs are indistinguishable at s={p.s} (c={c})")
    return c, m1, m2


def centroid_rotation(p: ParamPoint, cfg: OpticalConfig) -> Tuple[float, float, float]:
    """(cos theta, sin theta, d theta / ds) with v1 = -sin e1 + cos e2, v2 = cos e1 + sin e2."""
    c, m1, m2 = require_distinct(p, cfg)
    g2 = p.q * (1.0 - p.q)
    norm_sq = 1.0 - 2.0 * g2 * m1
    scale = np.sqrt(2.0 * norm_sq)
    cos_t = np.sqrt(1.0 + c) / scale
    sin_t = (1.0 - 2.0 * p.q) * np.sqrt(m1) / scale
    dtheta = -(1.0 - 2.0 * p.q) * beta_coefficient(p.s, cfg.sigma) / (norm_sq * np.sqrt(m2))
    return float(cos_t), float(sin_t), float(dtheta)


def basis_rotation(p: ParamPoint, cfg: OpticalConfig, which: str) -> np.ndarray:
    """Columns hold the basis vectors of ``which`` in geometric coordinates."""
    if which == BASIS_GEOMETRIC:
        require_distinct(p, cfg)
        return np.eye(2)
    if which == BASIS_CENTROID:
        cos_t, sin_t, _ = centroid_rotation(p, cfg)
        return np.array([[-sin_t, cos_t], [cos_t, sin_t]])
    raise DomainError(f"Unknown basis: {which}")


def basis_coefficients(p: ParamPoint, cfg: OpticalConfig, which: str) -> np.ndarray:
    """Rows hold the basis vectors of ``which`` over (|psi>, |phi>)."""
    c, m1, _ = require_distinct(p, cfg)
    n1 = np.sqrt(2.0 * m1)
    n2 = np.sqrt(2.0 * (1.0 + c))
    geometric = np.array([[1.0 / n1, -1.0 / n1], [1.0 / n2, 1.0 / n2]])
    return basis_rotation(p, cfg, which).T @ geometric


def separation_from_purity(
    r: float,
    p: ParamPoint,
    cfg: OpticalConfig,
    bracket: Tuple[float, float] = PURITY_BRACKET,
    xtol: float = PURITY_XTOL,
) -> float:
    """Invert r -> s with q and gamma held at ``p`` (monotone regime only)."""
    s0 = bijectivity_point(p, cfg.sigma)
    if s0 is not None:
        raise NonBijectiveError(
            f"Purity is not monotone in s for gamma_r={p.gamma_r}; minimum at s0={s0}",
            s0=s0,
        )
    lo, hi = bracket[0] * cfg.sigma, bracket[1] * cfg.sigma

    def residual(s: float) -> float:
        return purity(p.with_value(PARAM_S, s), cfg).r - r

    f_lo, f_hi = residual(lo), residual(hi)
    if f_lo * f_hi > 0:
        raise DomainError(f"Purity {r} is not reachable on s in [{lo}, {hi}]")
    return float(brentq(residual, lo, hi, xtol=xtol))
