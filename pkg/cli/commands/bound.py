"""Bound command for the CLI."""

import logging
from typing import Optional

import pandas as pd

from coherent_imaging.core.api.exceptions import CoherentImagingError
from coherent_imaging.core.api.models.domain.params import ParamPoint
from coherent_imaging.core.const import EXIT_SUCCESS, EXIT_USAGE_ERROR, UNITS_NOTE, VERSION

from .base import BaseCommand
from ..utils.display import print_command_header, print_info, print_matrix, print_success

logger = logging.getLogger(__name__)


class BoundCommand(BaseCommand):
    """Print the van Trees information at one parameter point."""

    async def execute(
        self,
        s: float,
        q: float,
        gamma_r: float = 0.0,
        gamma_i: float = 0.0,
        alpha: Optional[str] = None,
        output: Optional[str] = None,
    ) -> int:
        """Execute the bound command."""
        print_command_header("BOUND", "van Trees information and BMSE bound")

        if not await self.setup():
            return EXIT_USAGE_ERROR

        try:
            p = ParamPoint(s=s, q=q, gamma_r=gamma_r, gamma_i=gamma_i)
            cfg = self.config_manager.build_optical_config(alpha, q)
            unit = cfg.delta / (4.0 * cfg.sigma**2)
            print_info(f"{p} with alpha={cfg.alpha:g}; matrices {UNITS_NOTE}")
            print()

            split = await self.bounds_use_case.get_information_split(p, cfg)
            info = await self.bounds_use_case.get_van_trees(p, cfg)
            bound = await self.bounds_use_case.get_bmse_bound(info)

            print_matrix("van Trees information", info, unit)
            print_matrix("Quantum contribution (n_bar QFI)", split.quantum, unit)
            print_matrix("Classical contribution (photon arrivals)", split.classical, unit)
            print_matrix("BMSE bound (raw units)", bound)

            if output:
                rows = [
                    {"matrix": matrix.kind, "row": first, "col": second, "value": matrix.entry(first, second)}
                    for matrix in (info, split.quantum, split.classical, bound)
                    for first in matrix.names
                    for second in matrix.names
                ]
                metadata = {
                    "tool_version": VERSION,
                    "delta": cfg.delta,
                    "sigma": cfg.sigma,
                    "alpha": cfg.alpha,
                    **p.dict(),
                }
                repository = self.figure_use_case.dataset_repository
                path = await repository.save_table(pd.DataFrame(rows), output, metadata)
                print_success(f"Matrices written to {path}")
            return EXIT_SUCCESS

        except CoherentImagingError as e:
            return self.fail(e, "Bound evaluation failed")
