"""Monte Carlo detection records and maximum-likelihood estimation."""

import logging
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import xlogy

from ..api.exceptions import (
    CoherentImagingError,
    ConfigurationError,
    EstimationError,
)
from ..api.models.domain.measurement import BinaryPOVM, DetectionRecord, MleResult
from ..api.models.domain.params import OpticalConfig, ParamPoint
from ..const import (
    FD_STEP,
    PARAM_GAMMA_I,
    PARAM_GAMMA_R,
    PARAM_Q,
    PARAM_S,
    PARAMETER_NAMES,
)
from .measurement import outcome_probabilities
from .state import mean_photon_number

_LOGGER = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence, None]

FLAT_LIKELIHOOD_TOL = 1e-12
SEARCH_SEGMENTS = 3
COORDINATE_SWEEPS = 4
COORDINATE_XTOL = 1e-10
FLAT_SCAN_POINTS = 9

# Search intervals; the separation interval is in units of sigma
PARAMETER_BOUNDS: Dict[str, Tuple[float, float]] = {
    PARAM_S: (1e-9, 6.0),
    PARAM_Q: (0.0, 1.0),
    PARAM_GAMMA_R: (-1.0, 1.0),
    PARAM_GAMMA_I: (-1.0, 1.0),
}


def outcome_distribution(
    p: ParamPoint, cfg: OpticalConfig, povm: Optional[BinaryPOVM]
) -> np.ndarray:
    """Per-slot probabilities of (vacuum, outcome 0, outcome 1).

    Without a measurement every photon is recorded as outcome 0.
    """
    n_bar = mean_photon_number(p, cfg)
    if n_bar == 0.0:
        return np.array([1.0, 0.0, 0.0])
    if povm is None:
        return np.array([1.0 - n_bar, n_bar, 0.0])
    p0, p1 = outcome_probabilities(p, cfg, povm)
    return np.array([1.0 - n_bar, n_bar * p0, n_bar * p1])


def simulate_detections(
    p: ParamPoint,
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
    slots: int,
    seed: SeedLike = None,
    trial: int = 0,
) -> DetectionRecord:
    """Sample ``slots`` detection slots; the same seed always gives the same record."""
    if slots <= 0:
        raise ConfigurationError(f"Slot count must be positive, got {slots}")
    if povm is not None and povm.reference is None:
        povm = povm.anchored_at(p)
    probabilities = outcome_distribution(p, cfg, povm)
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(slots, probabilities / probabilities.sum())
    return DetectionRecord(
        slot_count=slots,
        n_vacuum=int(counts[0]),
        n_out0=int(counts[1]),
        n_out1=int(counts[2]),
        trial=trial,
        seed=seed if isinstance(seed, int) else None,
    )


def trial_seeds(seed: int, repetitions: int) -> List[np.random.SeedSequence]:
    """Independent child streams, one per trial, whatever order trials run in."""
    return np.random.SeedSequence(seed).spawn(repetitions)


def negative_log_likelihood(
    theta: ParamPoint,
    record: DetectionRecord,
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
) -> float:
    """Multinomial negative log-likelihood of one record."""
    try:
        probabilities = outcome_distribution(theta, cfg, povm)
    except CoherentImagingError:
        return np.inf
    value = -float(np.sum(xlogy(record.counts, probabilities)))
    return value if np.isfinite(value) else np.inf


def _bounds(name: str, cfg: OpticalConfig) -> Tuple[float, float]:
    lo, hi = PARAMETER_BOUNDS[name]
    if name == PARAM_S:
        return lo * cfg.sigma, hi * cfg.sigma
    return lo, hi


def _coordinate_objective(
    point: ParamPoint,
    name: str,
    record: DetectionRecord,
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
):
    def objective(value: float) -> float:
        try:
            candidate = point.with_value(name, value)
        except CoherentImagingError:
            return np.inf
        return negative_log_likelihood(candidate, record, cfg, povm)

    return objective


def _check_identifiable(
    start: ParamPoint,
    free: Sequence[str],
    record: DetectionRecord,
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
) -> None:
    for name in free:
        objective = _coordinate_objective(start, name, record, cfg, povm)
        lo, hi = _bounds(name, cfg)
        values = np.array([objective(v) for v in np.linspace(lo, hi, FLAT_SCAN_POINTS)])
        values = values[np.isfinite(values)]
        if values.size < 2:
            continue
        spread = float(values.max() - values.min())
        if spread <= FLAT_LIKELIHOOD_TOL * (1.0 + abs(float(values.min()))):
            raise EstimationError(
                f"Likelihood is flat in {name} for a record of {record.photons} photons"
            )


def _segment_minimum(objective, lo: float, hi: float) -> Tuple[float, float]:
    best_x, best_f = lo, np.inf
    edges = np.linspace(lo, hi, SEARCH_SEGMENTS + 1)
    for left, right in zip(edges[:-1], edges[1:]):
        result = minimize_scalar(
            objective, bounds=(left, right), method="bounded", options={"xatol": COORDINATE_XTOL}
        )
        if result.fun < best_f:
            best_x, best_f = float(result.x), float(result.fun)
    return best_x, best_f


def estimate_record(
    record: DetectionRecord,
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
    start: ParamPoint,
    free: Sequence[str],
) -> ParamPoint:
    """Coordinate-wise bounded maximization of one record's likelihood."""
    point = start
    for _ in range(COORDINATE_SWEEPS):
        previous = point
        for name in free:
            objective = _coordinate_objective(point, name, record, cfg, povm)
            value, _ = _segment_minimum(objective, *_bounds(name, cfg))
            point = point.with_value(name, value)
        if np.allclose(point.as_array(), previous.as_array(), atol=COORDINATE_XTOL):
            break
    return point


def mle_estimate(
    records: Sequence[DetectionRecord],
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
    start: ParamPoint,
    free: Sequence[str] = (PARAM_S,),
) -> MleResult:
    """Estimate the free parameters of every record and summarize over trials.

    Parameters not in ``free`` are held at their ``start`` values.
    """
    free = [name for name in PARAMETER_NAMES if name in free]
    if not free:
        raise EstimationError("At least one free parameter is required")
    if not records:
        raise EstimationError("No detection records to estimate from")
    if povm is not None and povm.reference is None:
        povm = povm.anchored_at(start)

    estimates: Dict[str, List[float]] = {name: [] for name in free}
    for record in records:
        _check_identifiable(start, free, record, cfg, povm)
        point = estimate_record(record, cfg, povm, start, free)
        for name in free:
            estimates[name].append(float(getattr(point, name)))

    theta_hat = {name: float(np.mean(values)) for name, values in estimates.items()}
    sample_variance = {
        name: float(np.var(values, ddof=1)) if len(values) > 1 else 0.0
        for name, values in estimates.items()
    }
    _LOGGER.debug("MLE over %s trials: %s", len(records), theta_hat)
    return MleResult(theta_hat=theta_hat, sample_variance=sample_variance, estimates=estimates)


def pool_records(records: Sequence[DetectionRecord]) -> DetectionRecord:
    """Merge records in any order into one."""
    if not records:
        raise EstimationError("No detection records to pool")
    return reduce(lambda left, right: left.merge(right), records)


def empirical_fisher(
    records: Sequence[DetectionRecord],
    p: ParamPoint,
    cfg: OpticalConfig,
    povm: Optional[BinaryPOVM],
    which: str = PARAM_S,
    step: float = FD_STEP,
) -> float:
    """Observed per-slot variance of the score for ``which`` at the true point."""
    if povm is not None and povm.reference is None:
        povm = povm.anchored_at(p)
    pooled = pool_records(records)
    h = step * (cfg.sigma if which == PARAM_S else 1.0)
    value = getattr(p, which)
    upper = outcome_distribution(p.with_value(which, value + h), cfg, povm)
    lower = outcome_distribution(p.with_value(which, value - h), cfg, povm)
    centre = outcome_distribution(p, cfg, povm)
    support = centre > 0.0
    score = np.zeros_like(centre)
    score[support] = (upper[support] - lower[support]) / (2.0 * h) / centre[support]
    frequencies = pooled.counts / pooled.slot_count
    mean = float(np.dot(frequencies, score))
    return float(np.dot(frequencies, score**2) - mean**2)
