"""Displaced Gaussian PSFs expanded over Hermite-Gauss modes centred at the origin.

A PSF (2 pi sigma^2)^(-1/4) exp(-(x - x0)^2 / (4 sigma^2)) is a displaced vacuum
with amplitude a = x0 / (2 sigma), so its n-th coefficient is
exp(-a^2 / 2) a^n / sqrt(n!).
"""

import logging
import warnings
from typing import Tuple

import numpy as np

from ..api.exceptions import DomainError, TruncationWarning
from ..api.models.domain.oracle import ModeExpansion
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..const import HG_ORDER, TRUNCATION_TOL

_LOGGER = logging.getLogger(__name__)


def displacement(center_offset: float, sigma: float) -> float:
    if not sigma > 0:
        raise DomainError(f"PSF width must be positive, got sigma={sigma}")
    return center_offset / (2.0 * sigma)


def expand_psf(center_offset: float, sigma: float, order: int = HG_ORDER) -> ModeExpansion:
    """First ``order`` Hermite-Gauss amplitudes of a PSF centred at ``center_offset``."""
    if order < 1:
        raise DomainError(f"Expansion order must be at least 1, got {order}")
    a = displacement(center_offset, sigma)
    coeffs = np.empty(order)
    coeffs[0] = np.exp(-0.5 * a * a)
    for n in range(1, order):
        coeffs[n] = coeffs[n - 1] * a / np.sqrt(n)
    expansion = ModeExpansion(center=float(center_offset), order=order, coeffs=coeffs)
    if expansion.truncation_error > TRUNCATION_TOL:
        warnings.warn(
            f"Hermite-Gauss truncation at N={order} loses {expansion.truncation_error:.3e} "
            f"of the norm for offset {center_offset}",
            TruncationWarning,
        )
    return expansion


def expand_psf_derivative(
    center_offset: float, sigma: float, order: int = HG_ORDER
) -> np.ndarray:
    """Derivative of the amplitudes with respect to the PSF centre.

    d c_n / d a = sqrt(n) c_(n-1) - a c_n and da / dx0 = 1 / (2 sigma).
    """
    expansion = expand_psf(center_offset, sigma, order)
    a = displacement(center_offset, sigma)
    coeffs = expansion.coeffs
    shifted = np.zeros(order)
    shifted[1:] = np.sqrt(np.arange(1, order)) * coeffs[:-1]
    return (shifted - a * coeffs) / (2.0 * sigma)


def source_expansions(
    p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER
) -> Tuple[np.ndarray, np.ndarray]:
    """Amplitudes of |psi> and |phi> for the sources at x1 and x2."""
    x1, x2 = cfg.source_positions(p.s)
    return (
        expand_psf(x1, cfg.sigma, order).coeffs,
        expand_psf(x2, cfg.sigma, order).coeffs,
    )


def source_derivatives(
    p: ParamPoint, cfg: OpticalConfig, order: int = HG_ORDER
) -> Tuple[np.ndarray, np.ndarray]:
    """Amplitudes of d|psi>/ds and d|phi>/ds; dx1/ds = -(1 - alpha), dx2/ds = alpha."""
    x1, x2 = cfg.source_positions(p.s)
    return (
        -(1.0 - cfg.alpha) * expand_psf_derivative(x1, cfg.sigma, order),
        cfg.alpha * expand_psf_derivative(x2, cfg.sigma, order),
    )
