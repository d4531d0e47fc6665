"""Figure command for the CLI."""

import logging
from typing import Optional, Sequence

from coherent_imaging.core.api.exceptions import CoherentImagingError
from coherent_imaging.core.api.models.domain.figures import FigureOptions
from coherent_imaging.core.const import EXIT_SUCCESS, EXIT_USAGE_ERROR

from .base import BaseCommand
from ..utils.display import print_command_header, print_figure_summary, print_info

logger = logging.getLogger(__name__)


class FigureCommand(BaseCommand):
    """Generate the CSV dataset of one figure."""

    async def execute(
        self,
        figure_id: str,
        output: Optional[str] = None,
        points: Optional[int] = None,
        workers: Optional[int] = None,
        delta: Optional[float] = None,
        sigma: Optional[float] = None,
        gamma_legend: Optional[Sequence[float]] = None,
    ) -> int:
        """Execute the figure command."""
        print_command_header("FIGURE", f"Dataset for {figure_id}")

        if not await self.setup():
            return EXIT_USAGE_ERROR

        try:
            config = self.config_manager.get_config()
            options = FigureOptions(
                sigma=sigma if sigma is not None else config["optics"]["sigma"],
                delta=delta if delta is not None else config["optics"]["delta"],
                points=points if points is not None else config["figures"]["points"],
                gamma_legend=tuple(gamma_legend or config["figures"]["gamma_legend"]),
                workers=workers if workers is not None else config["figures"]["workers"],
            )
            print_info(f"delta={options.delta:g}, sigma={options.sigma:g}, {options.points} points")

            dataset = await self.figure_use_case.run_figure(figure_id, options)
            path = await self.figure_use_case.save_figure(dataset, output)
            print_figure_summary(dataset, str(path))

            if self.log_runs:
                self.log_manager.log_figure_event(
                    figure_id, len(dataset.ok_rows), len(dataset.skipped_rows), str(path)
                )
            return EXIT_SUCCESS

        except CoherentImagingError as e:
            return self.fail(e, f"Figure {figure_id} failed")
