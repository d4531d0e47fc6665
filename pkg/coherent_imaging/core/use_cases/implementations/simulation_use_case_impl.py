"""Simulation use case implementation."""

import asyncio
import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional

import numpy as np

from ...api.models.domain.measurement import BinaryPOVM, DetectionRecord
from ...api.models.domain.params import OpticalConfig, ParamPoint
from ...api.models.domain.validation import SimulationSummary
from ...api.models.dto.scenario_dto import NO_POVM, ScenarioDTO
from ...const import PARAM_S, PARAMETER_NAMES, VERSION
from ...physics.bounds import van_trees_info
from ...physics.estimation import empirical_fisher, mle_estimate, simulate_detections, trial_seeds
from ...repositories.interfaces.dataset_repository import DatasetRepository
from ...repositories.interfaces.scenario_repository import ScenarioRepository
from ..interfaces.simulation_use_case import SimulationUseCase

_LOGGER = logging.getLogger(__name__)


def crb_for(p: ParamPoint, cfg: OpticalConfig, free: List[str], slots: int) -> Dict[str, float]:
    """Diagonal of the inverse van Trees information over the free parameters, for ``slots`` slots."""
    info = van_trees_info(p, cfg).entries
    index = [PARAMETER_NAMES.index(name) for name in free]
    block = slots * info[np.ix_(index, index)]
    inverse = np.linalg.pinv(block, hermitian=True)
    return {name: float(inverse[k, k]) for k, name in enumerate(free)}


class SimulationUseCaseImpl(SimulationUseCase):
    """Implementation of the simulation use case."""

    def __init__(
        self,
        dataset_repository: DatasetRepository,
        scenario_repository: ScenarioRepository,
        workers: int = 4,
    ):
        """Initialize the use case with dependencies."""
        self.dataset_repository = dataset_repository
        self.scenario_repository = scenario_repository
        self._workers = workers

    async def load_scenario(self, path: str) -> ScenarioDTO:
        """Load a scenario file."""
        try:
            return await self.scenario_repository.load_scenario(path)

        except Exception as e:
            _LOGGER.error("Error loading scenario %s: %s", path, e)
            raise

    async def run_simulation(
        self, scenario: ScenarioDTO, output: Optional[str] = None
    ) -> SimulationSummary:
        """Simulate, estimate and compare with the bound."""
        try:
            p = ParamPoint(s=scenario.s, q=scenario.q, gamma_r=scenario.gamma_r, gamma_i=scenario.gamma_i)
            cfg = OpticalConfig(sigma=scenario.sigma, delta=scenario.delta).with_policy(scenario.alpha, scenario.q)
            povm = BinaryPOVM(scenario.povm).anchored_at(p) if scenario.povm else None
            _LOGGER.info(
                "Simulating %s trials of %s slots with seed %s",
                scenario.repetitions,
                scenario.slots,
                scenario.seed,
            )

            loop = asyncio.get_running_loop()
            seeds = trial_seeds(scenario.seed, scenario.repetitions)
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                records: List[DetectionRecord] = await asyncio.gather(
                    *(
                        loop.run_in_executor(
                            executor, simulate_detections, p, cfg, povm, scenario.slots, seed, trial
                        )
                        for trial, seed in enumerate(seeds)
                    )
                )
                records = [dataclasses.replace(record, seed=scenario.seed) for record in records]
                mle = await loop.run_in_executor(
                    executor, mle_estimate, records, cfg, povm, p, scenario.free
                )

            records_path = await self.dataset_repository.save_records(
                records,
                output or scenario.output or f"simulation_seed{scenario.seed}.csv",
                self._metadata(scenario, cfg),
            )
            summary = SimulationSummary(
                mle=mle,
                crb=crb_for(p, cfg, list(mle.theta_hat), scenario.slots),
                records_path=records_path,
                empirical_fisher=(
                    empirical_fisher(records, p, cfg, povm) if PARAM_S in mle.theta_hat else None
                ),
            )
            _LOGGER.info("Simulation finished: variance/CRB %s", summary.variance_ratio)
            return summary

        except Exception as e:
            _LOGGER.error("Error running simulation: %s", e)
            raise

    @staticmethod
    def _metadata(scenario: ScenarioDTO, cfg: OpticalConfig) -> Dict[str, Any]:
        return {
            "tool_version": VERSION,
            "seed": scenario.seed,
            "s": scenario.s,
            "q": scenario.q,
            "gamma_r": scenario.gamma_r,
            "gamma_i": scenario.gamma_i,
            "sigma": cfg.sigma,
            "delta": cfg.delta,
            "alpha": scenario.alpha,
            "povm": scenario.povm or NO_POVM,
            "slots": scenario.slots,
            "repetitions": scenario.repetitions,
        }
