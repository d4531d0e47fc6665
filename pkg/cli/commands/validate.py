"""Validate command for the CLI."""

import logging
from typing import Optional

from coherent_imaging.core.api.exceptions import CoherentImagingError, ValidationFailure
from coherent_imaging.core.const import EXIT_SUCCESS, EXIT_USAGE_ERROR, PRESET_DEFAULT

from .base import BaseCommand
from ..utils.display import print_command_header, print_success, print_validation_report

logger = logging.getLogger(__name__)


class ValidateCommand(BaseCommand):
    """Cross-check the closed forms against the numeric oracle."""

    async def execute(self, preset: str = PRESET_DEFAULT, output: Optional[str] = None) -> int:
        """Execute the validate command."""
        print_command_header("VALIDATE", f"Oracle, residual and commutator checks ({preset})")

        if not await self.setup():
            return EXIT_USAGE_ERROR

        try:
            report = await self.validation_use_case.run_validation(preset, output)
            print_validation_report(report)
            if self.log_runs:
                self.log_manager.log_validation_event(preset, report.passed, report.failures)
            if not report.passed:
                raise ValidationFailure(report.failures)
            print_success(f"Validation {preset} passed")
            return EXIT_SUCCESS

        except CoherentImagingError as e:
            return self.fail(e, f"Validation {preset} failed")
