"""Simulate command for the CLI."""

import logging
from typing import Optional

from coherent_imaging.core.api.exceptions import CoherentImagingError
from coherent_imaging.core.const import EXIT_SUCCESS, EXIT_USAGE_ERROR

from .base import BaseCommand
from ..utils.display import print_command_header, print_info, print_simulation_summary

logger = logging.getLogger(__name__)


class SimulateCommand(BaseCommand):
    """Run a Monte Carlo scenario and compare the MLE variance with the bound."""

    async def execute(self, scenario_path: str, output: Optional[str] = None) -> int:
        """Execute the simulate command."""
        print_command_header("SIMULATE", f"Scenario {scenario_path}")

        if not await self.setup():
            return EXIT_USAGE_ERROR

        try:
            scenario = await self.simulation_use_case.load_scenario(scenario_path)
            print_info(
                f"{scenario.repetitions} trial(s) x {scenario.slots} slots, "
                f"measurement {scenario.povm or 'counting only'}, seed {scenario.seed}"
            )
            summary = await self.simulation_use_case.run_simulation(scenario, output)
            print_simulation_summary(summary)

            if self.log_runs:
                self.log_manager.log_simulation_event(
                    scenario.seed, scenario.repetitions, summary.mle.theta_hat
                )
            return EXIT_SUCCESS

        except CoherentImagingError as e:
            return self.fail(e, "Simulation failed")
