"""Validation use case implementation."""

import asyncio
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ...api.exceptions import CoherentImagingError, ConfigurationError
from ...api.models.domain.operators import ExtendedOperator
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...api.models.domain.state import bloch_matrix
from ...api.models.domain.validation import ValidationGridPoint, ValidationReport
from ...api.models.dto.validation_row_dto import ValidationRowDTO
from ...const import (
    DEFAULT_DELTA,
    DEFAULT_SIGMA,
    FD_STEP,
    HG_ORDER,
    KERNEL_TOL,
    PARAM_S,
    PARAMETER_NAMES,
    PRESET_DEFAULT,
    PRESET_QUICK,
    VERSION,
)
from ...physics.bounds import information_matrix
from ...physics.oracle import dense_state, density_derivative, extended_frame, numeric_qfi, sld_residual
from ...physics.sld import SCALAR_PARAMETERS, all_slds, commutator_norms, embed, sld_scalar, sld_separation
from ...physics.state import bloch_derivative, bloch_vector
from ...repositories.interfaces.dataset_repository import DatasetRepository
from ...utils.fitting import fitted_slope, log_grid
from ..interfaces.validation_use_case import ValidationUseCase

_LOGGER = logging.getLogger(__name__)

CHECK_ORACLE = "oracle_qfi"
CHECK_RESIDUAL = "sld_residual"
CHECK_COMMUTATOR = "commutator_order"
CHECK_WEAK_COMMUTATIVITY = "weak_commutativity_order"

ORACLE_TOL = 1e-6
QUBIT_RESIDUAL_TOL = 1e-10
EXTENDED_RESIDUAL_TOL = 1e-8
ORDER_TOL = 0.05
VANISHING_TOL = 1e-12

COMMUTATOR_POINT = ParamPoint(s=0.0, q=0.3, gamma_r=0.3, gamma_i=0.2)
COMMUTATOR_RANGE = (1e-3, 1e-2)
COMMUTATOR_POINTS = 6

SeparationSld = Callable[[ParamPoint, OpticalConfig], ExtendedOperator]


def _centroid_point(s: float, q: float, gamma_r: float, gamma_i: float) -> ValidationGridPoint:
    return ValidationGridPoint(s=s, q=q, gamma_r=gamma_r, gamma_i=gamma_i, alpha=q)


def validation_grid(preset: str) -> List[ValidationGridPoint]:
    """Grid points of a preset; the frame follows the centroid so nu is exercised off q = 1/2."""
    if preset == PRESET_QUICK:
        return [
            _centroid_point(0.5, 0.3, 0.4, 0.2),
            _centroid_point(0.1, 0.7, -0.4, 0.0),
            _centroid_point(1.5, 0.5, 0.0, 0.2),
        ]
    if preset == PRESET_DEFAULT:
        return [
            _centroid_point(s, q, gr, gi)
            for s, q, gr, gi in itertools.product(
                (0.1, 1.0, 2.0), (0.25, 0.5, 0.75), (-0.5, 0.0, 0.5), (0.0, 0.2, 0.4)
            )
        ]
    raise ConfigurationError(f"Unknown validation preset: {preset}")


def _row(
    check: str,
    point: str,
    entry: str,
    closed_form: float,
    oracle: float,
    rel_error: float,
    tolerance: float,
) -> ValidationRowDTO:
    return ValidationRowDTO(
        check=check,
        grid_point=point,
        entry=entry,
        closed_form=float(closed_form),
        oracle=float(oracle),
        rel_error=float(rel_error),
        tolerance=tolerance,
        passed=bool(np.isfinite(rel_error) and rel_error <= tolerance),
    )


def order_row(
    check: str,
    label: str,
    entry: str,
    separations: np.ndarray,
    series: np.ndarray,
    expected: float,
) -> ValidationRowDTO:
    """Row for the fitted log-log order of ``series``.

    A series that vanishes identically has no finite order and satisfies any
    lower bound; it is reported with an infinite order instead of a fit to noise.
    """
    if np.max(np.abs(series)) <= VANISHING_TOL:
        _LOGGER.debug("%s %s vanishes identically (max %s)", check, entry, np.max(np.abs(series)))
        return _row(check, label, entry, np.inf, expected, 0.0, ORDER_TOL)
    slope = fitted_slope(separations, series) if np.all(series > 0) else np.nan
    return _row(check, label, entry, slope, expected, abs(slope - expected), ORDER_TOL)


class ValidationUseCaseImpl(ValidationUseCase):
    """Implementation of the validation use case."""

    def __init__(
        self,
        dataset_repository: DatasetRepository,
        separation_sld: SeparationSld = sld_separation,
        order: int = HG_ORDER,
        step: float = FD_STEP,
        workers: int = 4,
    ):
        """Initialize the use case with dependencies."""
        self.dataset_repository = dataset_repository
        self._separation_sld = separation_sld
        self._order = order
        self._step = step
        self._workers = workers

    async def run_validation(
        self, preset: str = PRESET_DEFAULT, output: Optional[str] = None
    ) -> ValidationReport:
        """Run the oracle, residual and commutator checks of a preset."""
        try:
            grid = validation_grid(preset)
            _LOGGER.info("Validation %s over %s grid points", preset, len(grid))

            loop = asyncio.get_running_loop()
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                per_point = await asyncio.gather(
                    *(loop.run_in_executor(executor, self._check_point, point) for point in grid)
                )

            report = ValidationReport(preset=preset)
            for rows in per_point:
                report.rows.extend(rows)
            report.rows.extend(self._commutator_rows())

            metadata = {
                "tool_version": VERSION,
                "preset": preset,
                "grid_points": len(grid),
                "hg_order": self._order,
                "fd_step": self._step,
                "failures": ",".join(report.failures) or "none",
            }
            report.path = await self.dataset_repository.save_validation_report(
                report.rows, output or f"validation_{preset}.csv", metadata
            )
            if report.passed:
                _LOGGER.info("Validation %s passed with %s rows", preset, len(report.rows))
            else:
                _LOGGER.warning("Validation %s failed: %s", preset, ", ".join(report.failures))
            return report

        except Exception as e:
            _LOGGER.error("Error running validation %s: %s", preset, e)
            raise

    def _closed_form_slds(self, p: ParamPoint, cfg: OpticalConfig) -> Dict[str, np.ndarray]:
        slds = all_slds(p, cfg)
        slds[PARAM_S] = self._separation_sld(p, cfg).matrix()
        return slds

    def _check_point(self, point: ValidationGridPoint) -> List[ValidationRowDTO]:
        p = ParamPoint(s=point.s, q=point.q, gamma_r=point.gamma_r, gamma_i=point.gamma_i)
        cfg = OpticalConfig(sigma=DEFAULT_SIGMA, delta=DEFAULT_DELTA, alpha=point.alpha)
        _LOGGER.debug("Validating %s", point.label)
        return self._oracle_rows(p, cfg, point.label) + self._residual_rows(p, cfg, point.label)

    def _oracle_rows(self, p: ParamPoint, cfg: OpticalConfig, label: str) -> List[ValidationRowDTO]:
        size = len(PARAMETER_NAMES)
        closed = np.full((size, size), np.nan)
        oracle = np.full((size, size), np.nan)
        try:
            rho = embed(bloch_vector(p, cfg).density_matrix())
            closed = information_matrix(rho, self._closed_form_slds(p, cfg))
            oracle = numeric_qfi(p, cfg, self._order, self._step).entries
        except CoherentImagingError as e:
            _LOGGER.warning("Oracle comparison failed at %s: %s", label, e)

        scale = np.maximum(np.sqrt(np.outer(np.abs(np.diag(closed)), np.abs(np.diag(closed)))), KERNEL_TOL)
        rows = []
        for i, first in enumerate(PARAMETER_NAMES):
            for j, second in enumerate(PARAMETER_NAMES):
                error = abs(closed[i, j] - oracle[i, j]) / scale[i, j]
                rows.append(
                    _row(CHECK_ORACLE, label, f"{first}/{second}", closed[i, j], oracle[i, j], error, ORACLE_TOL)
                )
        return rows

    def _residual_rows(self, p: ParamPoint, cfg: OpticalConfig, label: str) -> List[ValidationRowDTO]:
        rows = []
        try:
            rho = dense_state(p, cfg, self._order)
            drho = density_derivative(p, cfg, PARAM_S, self._step, self._order)
            frame = extended_frame(p, cfg, self._order)
            sld = frame @ self._separation_sld(p, cfg).matrix() @ frame.T
            residual = sld_residual(rho, drho, sld)
        except CoherentImagingError as e:
            _LOGGER.warning("Separation residual failed at %s: %s", label, e)
            residual = np.inf
        rows.append(_row(CHECK_RESIDUAL, label, PARAM_S, residual, 0.0, residual, EXTENDED_RESIDUAL_TOL))

        state = bloch_vector(p, cfg)
        rho2 = state.density_matrix()
        for name in SCALAR_PARAMETERS:
            try:
                drho2 = 0.5 * bloch_matrix(0.0, bloch_derivative(p, cfg, name))
                operator = sld_scalar(p, cfg, name).matrix()
                residual = float(np.linalg.norm(drho2 - 0.5 * (rho2 @ operator + operator @ rho2), "fro"))
            except CoherentImagingError as e:
                _LOGGER.warning("Residual for %s failed at %s: %s", name, label, e)
                residual = np.inf
            rows.append(_row(CHECK_RESIDUAL, label, name, residual, 0.0, residual, QUBIT_RESIDUAL_TOL))
        return rows

    def _commutator_rows(self) -> List[ValidationRowDTO]:
        """Fitted small-separation orders of the commutator norms and weak-commutativity traces."""
        cfg = OpticalConfig(sigma=DEFAULT_SIGMA, delta=DEFAULT_DELTA)
        separations = log_grid(*COMMUTATOR_RANGE, COMMUTATOR_POINTS) * cfg.sigma
        samples: Dict[Tuple[str, str], List[Tuple[float, float]]] = {}
        for s in separations:
            for pair, values in commutator_norms(COMMUTATOR_POINT.with_value(PARAM_S, s), cfg).items():
                samples.setdefault(pair, []).append(values)

        label = f"q={COMMUTATOR_POINT.q:g};gr={COMMUTATOR_POINT.gamma_r:g};gi={COMMUTATOR_POINT.gamma_i:g}"
        rows = []
        for (first, second), values in samples.items():
            norms, traces = (np.array(column) for column in zip(*values))
            with_separation = PARAM_S in (first, second)
            expected_norm, expected_trace = (0.0, 1.0) if with_separation else (1.0, 2.0)
            entry = f"{first}/{second}"
            for check, series, expected in (
                (CHECK_COMMUTATOR, norms, expected_norm),
                (CHECK_WEAK_COMMUTATIVITY, traces, expected_trace),
            ):
                rows.append(order_row(check, label, entry, separations, series, expected))
        return rows
