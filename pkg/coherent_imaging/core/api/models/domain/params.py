"""Parameter domain models for the two-source imaging model."""

from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Tuple, Union

import numpy as np

from ...exceptions import ConfigurationError, DomainError
from ....const import (
    ALPHA_CENTROID,
    ALPHA_GEOMETRIC,
    DEFAULT_ALPHA,
    DEFAULT_DELTA,
    DEFAULT_SIGMA,
    PARAMETER_NAMES,
)

_COHERENCE_SLACK = 1e-12


@dataclass(frozen=True)
class ParamPoint:
    """Estimation target theta = (s, q, gamma_r, gamma_i)."""

    s: float
    q: float
    gamma_r: float = 0.0
    gamma_i: float = 0.0

    def __post_init__(self) -> None:
        if not np.isfinite([self.s, self.q, self.gamma_r, self.gamma_i]).all():
            raise DomainError(f"Non-finite parameter point: {self}")
        if self.s < 0:
            raise DomainError(f"Separation must be non-negative, got s={self.s}")
        if not 0.0 <= self.q <= 1.0:
            raise DomainError(f"Relative intensity must lie in [0, 1], got q={self.q}")
        if self.gamma_abs_sq > 1.0 + _COHERENCE_SLACK:
            raise DomainError(
                f"Coherence factor must satisfy |gamma| <= 1, got |gamma|^2={self.gamma_abs_sq}"
            )

    @property
    def gamma_abs_sq(self) -> float:
        """Squared modulus of the coherence factor."""
        return self.gamma_r**2 + self.gamma_i**2

    @property
    def is_fully_coherent(self) -> bool:
        return abs(1.0 - self.gamma_abs_sq) <= 1e-10

    @property
    def is_boundary_intensity(self) -> bool:
        return self.q in (0.0, 1.0)

    def as_array(self) -> np.ndarray:
        return np.array([self.s, self.q, self.gamma_r, self.gamma_i], dtype=float)

    @classmethod
    def from_array(cls, values: Any) -> "ParamPoint":
        s, q, gamma_r, gamma_i = (float(v) for v in values)
        return cls(s=s, q=q, gamma_r=gamma_r, gamma_i=gamma_i)

    def with_value(self, name: str, value: float) -> "ParamPoint":
        """Return a copy with one named parameter replaced."""
        if name not in PARAMETER_NAMES:
            raise DomainError(f"Unknown parameter: {name}")
        return replace(self, **{name: float(value)})

    def dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class OpticalConfig:
    """PSF width sigma, intensity scale delta and reference-frame weight alpha."""

    sigma: float = DEFAULT_SIGMA
    delta: float = DEFAULT_DELTA
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise DomainError(f"PSF width must be positive, got sigma={self.sigma}")
        if not 0.0 < self.delta <= 1.0:
            raise ConfigurationError(f"Intensity scale must lie in (0, 1], got delta={self.delta}")
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"Frame weight must lie in [0, 1], got alpha={self.alpha}")

    def source_positions(self, s: float) -> Tuple[float, float]:
        """Positions x1 = -(1 - alpha) s and x2 = alpha s."""
        return -(1.0 - self.alpha) * s, self.alpha * s

    def with_alpha(self, alpha: float) -> "OpticalConfig":
        return replace(self, alpha=float(alpha))

    def with_policy(self, policy: Union[str, float], q: float) -> "OpticalConfig":
        """Resolve a frame policy (geometric, centroid or a number) at intensity q."""
        return self.with_alpha(resolve_alpha(policy, q))

    def dict(self) -> Dict[str, Any]:
        return asdict(self)


def resolve_alpha(policy: Union[str, float], q: float) -> float:
    """Map an alpha policy to a numeric frame weight."""
    if isinstance(policy, str):
        if policy == ALPHA_GEOMETRIC:
            return 0.5
        if policy == ALPHA_CENTROID:
            return float(q)
        try:
            return float(policy)
        except ValueError as e:
            raise ConfigurationError(f"Unknown alpha policy: {policy}") from e
    return float(policy)
