"""Figure use case implementation.

Each figure is a plan: grid keys, the information columns (emitted in
delta / (4 sigma^2) units and raw), plain columns and a per-point evaluator.
Points run on a thread pool and are assembled in grid order.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from ...api.exceptions import CoherentImagingError, ConfigurationError
from ...api.models.domain.figures import FigureDataset, FigureOptions
from ...api.models.domain.measurement import BinaryPOVM
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...const import (
    ALPHA_CENTROID,
    ALPHA_GEOMETRIC,
    BASIS_GEOMETRIC,
    MODE_EXACT,
    MODE_QUBIT_APPROX,
    PARAM_GAMMA_I,
    PARAM_GAMMA_R,
    PARAM_Q,
    PARAM_S,
    PARAMETER_NAMES,
    POVM_HG0_CENTROID,
    POVM_HG0_GEOMETRIC,
    POVM_PROJECTOR_E,
    POVM_PROJECTOR_V,
    UNITS_NOTE,
    VERSION,
)
from ...physics.bounds import (
    indirect_info,
    qfi_state_matrix,
    quantum_and_classical_parts,
    qubit_approx_info,
    van_trees_info,
)
from ...physics.measurement import misalignment_relative_difference, spade_fisher_s
from ...physics.state import mean_photon_number, purity
from ...repositories.interfaces.dataset_repository import DatasetRepository
from ...utils.fitting import log_grid
from ..interfaces.figure_use_case import FigureUseCase

_LOGGER = logging.getLogger(__name__)

ENTRY_LABELS = {PARAM_S: "ss", PARAM_Q: "qq", PARAM_GAMMA_R: "grgr", PARAM_GAMMA_I: "gigi"}

SEPARATION_RANGE = (1e-2, 6.0)
SMALL_SEPARATION = 1e-3
MEASUREMENT_SEPARATION = 1e-2
INDIRECT_SEPARATION = 1e-5
MISALIGNED_ALPHA = 0.7
MARKER_Q = 0.75
MEASUREMENT_GAMMAS = (0.5, -0.5)
INDIRECT_GAMMAS = (-0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6)
INDIRECT_Q = 0.5
PURITY_GAMMAS = (0.5, -0.5)
PURITY_Q = 0.4
PURITY_RANGE = (0.0, 6.0)

Evaluator = Callable[[Dict[str, float]], Dict[str, Optional[float]]]


@dataclass
class FigurePlan:
    """Grid keys, value columns and the per-point evaluator of one figure."""

    key_columns: List[str]
    keys: List[Dict[str, float]]
    evaluate: Evaluator
    alpha: str
    information_columns: List[str] = field(default_factory=list)
    plain_columns: List[str] = field(default_factory=list)

    def columns(self) -> List[str]:
        scaled = [name for column in self.information_columns for name in (column, f"{column}_raw")]
        return list(self.key_columns) + scaled + list(self.plain_columns)


def _optics(options: FigureOptions, alpha: float = 0.5) -> OpticalConfig:
    return OpticalConfig(sigma=options.sigma, delta=options.delta, alpha=alpha)


def _grid(first: Sequence[float], second: Sequence[float], names: Sequence[str]) -> List[Dict[str, float]]:
    return [{names[0]: float(a), names[1]: float(b)} for a in first for b in second]


def _q_grid(options: FigureOptions) -> np.ndarray:
    return np.linspace(0.0, 1.0, options.points)


def _evaluate_point(evaluate: Evaluator, key: Dict[str, float]) -> Union[Dict[str, Optional[float]], str]:
    """Values of one point, or the reason it is singular."""
    try:
        values = evaluate(key)
    except CoherentImagingError as e:
        return f"{type(e).__name__}: {e}"
    finite = [v for v in values.values() if v is not None]
    if not np.all(np.isfinite(finite)):
        return "non-finite value"
    return values


def _plan_fig1(options: FigureOptions) -> FigurePlan:
    cfg = _optics(options)
    parts = ("vt", "quantum", "classical")

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        p = ParamPoint(s=key["s_over_sigma"] * cfg.sigma, q=0.5, gamma_r=key["gamma_r"])
        split = quantum_and_classical_parts(p, cfg)
        values: Dict[str, Optional[float]] = {}
        for i, name in enumerate(PARAMETER_NAMES):
            label = ENTRY_LABELS[name]
            values[f"vt_{label}"] = float(split.total[i, i])
            values[f"quantum_{label}"] = float(split.quantum.entries[i, i])
            values[f"classical_{label}"] = float(split.classical.entries[i, i])
        return values

    return FigurePlan(
        key_columns=["gamma_r", "s_over_sigma"],
        keys=_grid(options.gamma_legend, log_grid(*SEPARATION_RANGE, options.points), ("gamma_r", "s_over_sigma")),
        evaluate=evaluate,
        alpha=ALPHA_GEOMETRIC,
        information_columns=[f"{part}_{ENTRY_LABELS[n]}" for part in parts for n in PARAMETER_NAMES],
    )


def _plan_diagonals_vs_q(options: FigureOptions, centroid: bool) -> FigurePlan:
    base = _optics(options)
    names = PARAMETER_NAMES if not centroid else (PARAM_S,)

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        cfg = base.with_alpha(key["q"]) if centroid else base
        p = ParamPoint(s=SMALL_SEPARATION * cfg.sigma, q=key["q"], gamma_r=key["gamma_r"])
        info = van_trees_info(p, cfg)
        return {f"vt_{ENTRY_LABELS[name]}": info.entry(name) for name in names}

    return FigurePlan(
        key_columns=["gamma_r", "q"],
        keys=_grid(options.gamma_legend, _q_grid(options), ("gamma_r", "q")),
        evaluate=evaluate,
        alpha=ALPHA_CENTROID if centroid else ALPHA_GEOMETRIC,
        information_columns=[f"vt_{ENTRY_LABELS[name]}" for name in names],
    )


def _plan_fig2(options: FigureOptions) -> FigurePlan:
    return _plan_diagonals_vs_q(options, centroid=False)


def _plan_fig3(options: FigureOptions) -> FigurePlan:
    return _plan_diagonals_vs_q(options, centroid=True)


def _plan_fig4(options: FigureOptions) -> FigurePlan:
    base = _optics(options)
    q_values = np.union1d(_q_grid(options), [MARKER_Q])

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        q = key["q"]
        p = ParamPoint(s=SMALL_SEPARATION * base.sigma, q=q, gamma_r=key["gamma_r"])
        n_bar = mean_photon_number(p, base)
        return {
            "qfi_ss_centroid": n_bar * qfi_state_matrix(p, base.with_alpha(q)).entry(PARAM_S),
            "qfi_ss_fixed": n_bar * qfi_state_matrix(p, base.with_alpha(MISALIGNED_ALPHA)).entry(PARAM_S),
            "marker": 1.0 if np.isclose(q, MARKER_Q) else 0.0,
        }

    return FigurePlan(
        key_columns=["gamma_r", "q"],
        keys=_grid(options.gamma_legend, q_values, ("gamma_r", "q")),
        evaluate=evaluate,
        alpha=f"{ALPHA_CENTROID} and {MISALIGNED_ALPHA}",
        information_columns=["qfi_ss_centroid", "qfi_ss_fixed"],
        plain_columns=["marker"],
    )


def _plan_fig5(options: FigureOptions) -> FigurePlan:
    cfg = _optics(options)

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        p = ParamPoint(s=key["s_over_sigma"] * cfg.sigma, q=0.5, gamma_r=key["gamma_r"])
        exact = van_trees_info(p, cfg).entry(PARAM_S)
        qubit = qubit_approx_info(p, cfg, BASIS_GEOMETRIC).entry(PARAM_S)
        return {"exact_ss": exact, "qubit_ss": qubit, "extra_ss": exact - qubit}

    return FigurePlan(
        key_columns=["gamma_r", "s_over_sigma"],
        keys=_grid(options.gamma_legend, log_grid(*SEPARATION_RANGE, options.points), ("gamma_r", "s_over_sigma")),
        evaluate=evaluate,
        alpha=ALPHA_GEOMETRIC,
        information_columns=["exact_ss", "qubit_ss", "extra_ss"],
    )


_MEASUREMENT_VARIANTS = (
    ("fi_v_exact", POVM_PROJECTOR_V, MODE_EXACT),
    ("fi_v_qubit", POVM_PROJECTOR_V, MODE_QUBIT_APPROX),
    ("fi_e_exact", POVM_PROJECTOR_E, MODE_EXACT),
    ("fi_e_qubit", POVM_PROJECTOR_E, MODE_QUBIT_APPROX),
    ("fi_hg0_centroid", POVM_HG0_CENTROID, MODE_EXACT),
    ("fi_hg0_geometric", POVM_HG0_GEOMETRIC, MODE_EXACT),
)


def _plan_fig6(options: FigureOptions) -> FigurePlan:
    base = _optics(options)

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        cfg = base.with_alpha(key["q"])
        p = ParamPoint(s=MEASUREMENT_SEPARATION * cfg.sigma, q=key["q"], gamma_r=key["gamma_r"])
        values: Dict[str, Optional[float]] = {
            "qfi_ss": mean_photon_number(p, cfg) * qfi_state_matrix(p, cfg).entry(PARAM_S)
        }
        for column, kind, mode in _MEASUREMENT_VARIANTS:
            values[column] = spade_fisher_s(p, cfg, BinaryPOVM(kind), mode)
        return values

    return FigurePlan(
        key_columns=["gamma_r", "q"],
        keys=_grid(MEASUREMENT_GAMMAS, _q_grid(options), ("gamma_r", "q")),
        evaluate=evaluate,
        alpha=ALPHA_CENTROID,
        information_columns=["qfi_ss"] + [column for column, _, _ in _MEASUREMENT_VARIANTS],
    )


def _plan_fig7(options: FigureOptions) -> FigurePlan:
    base = _optics(options)

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        cfg = base.with_alpha(key["q"])
        p = ParamPoint(s=SMALL_SEPARATION * cfg.sigma, q=key["q"], gamma_r=key["gamma_r"])
        return {"rel_diff": misalignment_relative_difference(p, cfg)}

    return FigurePlan(
        key_columns=["gamma_r", "q"],
        keys=_grid(options.gamma_legend, _q_grid(options), ("gamma_r", "q")),
        evaluate=evaluate,
        alpha=ALPHA_CENTROID,
        plain_columns=["rel_diff"],
    )


def _plan_fig8(options: FigureOptions) -> FigurePlan:
    cfg = _optics(options)

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        p = ParamPoint(
            s=INDIRECT_SEPARATION * cfg.sigma,
            q=INDIRECT_Q,
            gamma_r=key["gamma_r"],
            gamma_i=key["gamma_i"],
        )
        direct = van_trees_info(p, cfg).entry(PARAM_S)
        # below s0 the purity branch with r > r_inf is the physical one
        result = indirect_info(p, cfg, above_r_inf=True if p.gamma_r < 0 else None)
        indirect = result.bound.entry(PARAM_S)
        return {
            "direct_ss": direct,
            "indirect_ss": indirect,
            "rel_diff": (direct - indirect) / direct,
            "bijective": 1.0 if result.bijective else 0.0,
            "s0_over_sigma": None if result.s0 is None else result.s0 / cfg.sigma,
        }

    return FigurePlan(
        key_columns=["gamma_r", "gamma_i"],
        keys=_grid(INDIRECT_GAMMAS, INDIRECT_GAMMAS, ("gamma_r", "gamma_i")),
        evaluate=evaluate,
        alpha=ALPHA_GEOMETRIC,
        information_columns=["direct_ss", "indirect_ss"],
        plain_columns=["rel_diff", "bijective", "s0_over_sigma"],
    )


def _plan_purity(options: FigureOptions) -> FigurePlan:
    cfg = _optics(options)

    def evaluate(key: Dict[str, float]) -> Dict[str, Optional[float]]:
        p = ParamPoint(s=key["s_over_sigma"] * cfg.sigma, q=PURITY_Q, gamma_r=key["gamma_r"])
        report = purity(p, cfg)
        return {
            "r": report.r,
            "r_inf": report.r_inf,
            "r_inc": report.r_inc,
            "s0_over_sigma": None if report.s0 is None else report.s0 / cfg.sigma,
        }

    return FigurePlan(
        key_columns=["gamma_r", "s_over_sigma"],
        keys=_grid(PURITY_GAMMAS, np.linspace(*PURITY_RANGE, options.points), ("gamma_r", "s_over_sigma")),
        evaluate=evaluate,
        alpha=ALPHA_GEOMETRIC,
        plain_columns=["r", "r_inf", "r_inc", "s0_over_sigma"],
    )


FIGURE_PLANS: Dict[str, Callable[[FigureOptions], FigurePlan]] = {
    "fig1": _plan_fig1,
    "fig2": _plan_fig2,
    "fig3": _plan_fig3,
    "fig4": _plan_fig4,
    "fig5": _plan_fig5,
    "fig6": _plan_fig6,
    "fig7": _plan_fig7,
    "fig8": _plan_fig8,
    "purity": _plan_purity,
}


class FigureUseCaseImpl(FigureUseCase):
    """Implementation of the figure use case."""

    def __init__(self, dataset_repository: DatasetRepository):
        """Initialize the use case with dependencies."""
        self.dataset_repository = dataset_repository

    async def run_figure(self, figure_id: str, options: FigureOptions) -> FigureDataset:
        """Sweep the grid of one figure."""
        try:
            builder = FIGURE_PLANS.get(figure_id)
            if builder is None:
                raise ConfigurationError(f"Unknown figure id: {figure_id}")
            plan = builder(options)
            _LOGGER.info(
                "Figure %s: %s grid points on %s workers", figure_id, len(plan.keys), options.workers
            )

            loop = asyncio.get_running_loop()
            with ThreadPoolExecutor(max_workers=options.workers) as executor:
                outcomes = await asyncio.gather(
                    *(loop.run_in_executor(executor, _evaluate_point, plan.evaluate, key) for key in plan.keys)
                )

            dataset = FigureDataset(
                figure_id=figure_id,
                columns=plan.columns(),
                metadata=self._metadata(figure_id, plan, options),
            )
            unit = options.figure_unit
            for key, outcome in zip(plan.keys, outcomes):
                if isinstance(outcome, str):
                    _LOGGER.warning("Figure %s skips %s: %s", figure_id, key, outcome)
                    dataset.add_skipped(key, outcome)
                    continue
                row: Dict[str, Any] = dict(key)
                for column in plan.information_columns:
                    row[column] = outcome[column] / unit
                    row[f"{column}_raw"] = outcome[column]
                for column in plan.plain_columns:
                    row[column] = outcome[column]
                dataset.add_row(row)

            _LOGGER.info(
                "Figure %s finished: %s rows, %s skipped",
                figure_id,
                len(dataset.ok_rows),
                len(dataset.skipped_rows),
            )
            return dataset

        except Exception as e:
            _LOGGER.error("Error running figure %s: %s", figure_id, e)
            raise

    async def save_figure(self, dataset: FigureDataset, path: Optional[str] = None) -> Path:
        """Write a figure dataset as CSV."""
        try:
            return await self.dataset_repository.save_figure(dataset, path)

        except Exception as e:
            _LOGGER.error("Error saving figure %s: %s", dataset.figure_id, e)
            raise

    @staticmethod
    def _metadata(figure_id: str, plan: FigurePlan, options: FigureOptions) -> Dict[str, Any]:
        return {
            "tool_version": VERSION,
            "figure_id": figure_id,
            "delta": options.delta,
            "sigma": options.sigma,
            "alpha": plan.alpha,
            "units": UNITS_NOTE,
        }
