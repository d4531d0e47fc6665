"""Gram-Schmidt constants for the separation derivative subspace.

The span {e1, e2, d_s e1, d_s e2} is orthonormalized into {e1, e2, e3, e4} with
    d_s e1 = nu e2 + a e3,
    d_s e2 = -nu e1 + (mu / a) e3 + b e4,
a^2 = omega1^2 - nu^2 and b^2 = omega2^2 - nu^2 - mu^2 / a^2.
All scalars are evaluated for sigma = 1 in cancellation-free form and rescaled.
"""

import logging
from typing import Dict, Tuple

import numpy as np
from scipy.special import gammainc

from ..api.exceptions import NumericDegeneracyError
from ..api.models.domain.operators import ExtendedBasisData
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..const import GRAM_SCHMIDT_TOL
from .state import require_distinct, overlap_exponent

_LOGGER = logging.getLogger(__name__)

_SERIES_LIMIT = 1.0


def sinh_minus_identity(t: float) -> float:
    """sinh(t) - t, by its Taylor series for small t."""
    if t >= _SERIES_LIMIT:
        return float(np.sinh(t) - t)
    t2 = t * t
    term = t * t2 / 6.0
    total = term
    n = 3
    while abs(term) > 1e-18 * abs(total):
        term *= t2 / ((n + 1) * (n + 2))
        total += term
        n += 2
    return float(total)


def beta_zeta(s: float, sigma: float) -> Tuple[float, float]:
    """(beta, zeta) = (-s c / (8 sigma^2), (s^2 - 4 sigma^2) c / (64 sigma^4))."""
    u = s / sigma
    c = float(np.exp(-overlap_exponent(s, sigma)))
    return -u * c / (8.0 * sigma), (u * u - 4.0) * c / (64.0 * sigma**2)


def derivative_overlaps(s: float, cfg: OpticalConfig) -> Dict[str, float]:
    """Closed-form inner products between the PSFs and their s-derivatives."""
    beta, zeta = beta_zeta(s, cfg.sigma)
    alpha = cfg.alpha
    return {
        "psi_dphi": 2.0 * alpha * beta,
        "phi_dpsi": 2.0 * (1.0 - alpha) * beta,
        "dpsi_dpsi": (1.0 - alpha) ** 2 / (4.0 * cfg.sigma**2),
        "dphi_dphi": alpha**2 / (4.0 * cfg.sigma**2),
        "dpsi_dphi": 4.0 * alpha * (1.0 - alpha) * zeta,
    }


def extended_basis(p: ParamPoint, cfg: OpticalConfig) -> ExtendedBasisData:
    """Constants beta, zeta, omega1^2, omega2^2, mu, nu and the e3/e4 expansions."""
    c, m1, m2 = require_distinct(p, cfg)
    sigma = cfg.sigma
    t = overlap_exponent(p.s, sigma)
    tilt = 1.0 - 2.0 * cfg.alpha
    k = tilt * tilt
    root = np.sqrt(m2)

    beta, zeta = beta_zeta(p.s, sigma)
    beta1 = beta * sigma

    z = 2.0 * c * sinh_minus_identity(t) / (16.0 * m1 * m1)
    a1 = 0.25 * (2.0 * t * c * c / m2 - 1.0 - 2.0 * t * c / m1)
    a_sq = z - k * a1 / 4.0
    nu1 = beta1 * tilt / root
    mu1 = tilt / root * gammainc(2.0, 2.0 * t) / (8.0 * m2)
    omega2_sq = (
        (m1 + k * (1.0 + c) + 2.0 * t * c * (1.0 - k)) / 16.0
        - t * c * c / (8.0 * (1.0 + c))
    ) / (1.0 + c)

    parameters = {"s": p.s, "q": p.q, "alpha": cfg.alpha, "sigma": sigma}
    if not a_sq > 0.0:
        raise NumericDegeneracyError("omega1^2 - nu^2 is not positive", parameters)
    b_sq = omega2_sq - nu1 * nu1 - mu1 * mu1 / a_sq
    if b_sq < -GRAM_SCHMIDT_TOL * omega2_sq:
        raise NumericDegeneracyError(
            f"omega2^2 - nu^2 - mu^2/(omega1^2 - nu^2) = {b_sq} is negative", parameters
        )

    inv2 = 1.0 / sigma**2
    a = np.sqrt(a_sq * inv2)
    nu = nu1 / sigma
    mu = mu1 * inv2
    b = np.sqrt(max(b_sq, 0.0) * inv2)
    e3 = np.array([1.0 / a, 0.0, 0.0, -nu / a])
    if b_sq > GRAM_SCHMIDT_TOL * omega2_sq:
        e4 = np.array(
            [-mu / (a * a * b), 1.0 / b, nu / b, mu * nu / (a * a * b)]
        )
    else:
        _LOGGER.debug("Fourth extended direction unresolved at %s (b^2=%s)", p, b_sq)
        e4 = None

    return ExtendedBasisData(
        beta=float(beta),
        zeta=float(zeta),
        omega1_sq=float((a_sq + nu1 * nu1) * inv2),
        omega2_sq=float(omega2_sq * inv2),
        mu=float(mu),
        nu=float(nu),
        a=float(a),
        b=float(b),
        e3_coeffs=e3,
        e4_coeffs=e4,
    )
