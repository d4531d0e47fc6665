"""Sweep command for the CLI."""

import logging
from typing import Any, Dict, List, Optional

import pandas as pd

from coherent_imaging.core.api.exceptions import CoherentImagingError
from coherent_imaging.core.api.models.domain.figures import LINEAR, SweepSpec
from coherent_imaging.core.api.models.domain.params import ParamPoint
from coherent_imaging.core.const import (
    ALPHA_GEOMETRIC,
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    PARAMETER_NAMES,
    STATUS_OK,
    STATUS_SKIPPED,
    VERSION,
)

from .base import BaseCommand
from ..utils.display import print_command_header, print_info, print_success, print_warning

logger = logging.getLogger(__name__)


class SweepCommand(BaseCommand):
    """Van Trees diagonal and purity along a one-parameter sweep."""

    async def execute(
        self,
        parameter: str,
        start: float,
        stop: float,
        points: int = 21,
        scale: str = LINEAR,
        fixed: Optional[Dict[str, float]] = None,
        alpha: Optional[str] = None,
        output: Optional[str] = None,
    ) -> int:
        """Execute the sweep command."""
        print_command_header("SWEEP", f"van Trees diagonal along {parameter}")

        if not await self.setup():
            return EXIT_USAGE_ERROR

        try:
            policy = alpha or self.config_manager.get_setting("optics.alpha", ALPHA_GEOMETRIC)
            spec = SweepSpec(parameter, start, stop, points, scale, dict(fixed or {}), policy)
            base = ParamPoint(**{"s": 0.5, "q": 0.5, **spec.fixed})
            rows = [await self._evaluate(spec, base, value) for value in spec.grid()]
            frame = pd.DataFrame(rows)

            skipped = frame[frame["status"] == STATUS_SKIPPED]
            print_success(f"Sweep over {parameter}: {len(frame) - len(skipped)} rows")
            if len(skipped):
                print_warning(f"{len(skipped)} singular point(s) skipped")

            if output:
                metadata = {
                    "tool_version": VERSION,
                    "parameter": parameter,
                    "scale": scale,
                    "alpha_policy": policy,
                    **base.dict(),
                }
                repository = self.figure_use_case.dataset_repository
                path = await repository.save_table(frame, output, metadata)
                print_info(f"Sweep written to {path}")
            return EXIT_SUCCESS

        except CoherentImagingError as e:
            return self.fail(e, "Sweep failed")

    async def _evaluate(self, spec: SweepSpec, base: ParamPoint, value: float) -> Dict[str, Any]:
        row: Dict[str, Any] = {spec.parameter: float(value), "status": STATUS_OK, "reason": ""}
        try:
            p = base.with_value(spec.parameter, float(value))
            cfg = self.config_manager.build_optical_config(spec.alpha_policy, p.q)
            info = await self.bounds_use_case.get_van_trees(p, cfg)
            purity = await self.state_use_case.get_purity(p, cfg)
        except CoherentImagingError as e:
            logger.debug("Skipping %s=%s: %s", spec.parameter, value, e)
            return {**row, "status": STATUS_SKIPPED, "reason": str(e)}

        unit = cfg.delta / (4.0 * cfg.sigma**2)
        diagonal: List[float] = list(info.diagonal / unit)
        row.update({f"info_{name}": entry for name, entry in zip(PARAMETER_NAMES, diagonal)})
        row["purity"] = purity.r
        return row
