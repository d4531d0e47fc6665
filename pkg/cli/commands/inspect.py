"""Inspect command for the CLI."""

import logging
from typing import Any, Dict, List, Optional

import pandas as pd

from coherent_imaging.core.api.exceptions import CoherentImagingError
from coherent_imaging.core.api.models.domain.measurement import BinaryPOVM
from coherent_imaging.core.api.models.domain.params import ParamPoint
from coherent_imaging.core.const import (
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    FD_STEP,
    HG_ORDER,
    PARAM_S,
    POVM_PROJECTOR_V,
    UNITS_NOTE,
    VERSION,
)

from .base import BaseCommand
from ..utils.display import (
    print_command_header,
    print_commutators,
    print_info,
    print_matrix,
    print_state,
    print_success,
)

logger = logging.getLogger(__name__)


class InspectCommand(BaseCommand):
    """Print the state, SLD commutators and measurement information at one point."""

    async def execute(
        self,
        s: float,
        q: float,
        gamma_r: float = 0.0,
        gamma_i: float = 0.0,
        alpha: Optional[str] = None,
        povm: str = POVM_PROJECTOR_V,
        oracle: bool = False,
        output: Optional[str] = None,
    ) -> int:
        """Execute the inspect command."""
        print_command_header("INSPECT", "Single-photon state, SLDs and measurements at one point")

        if not await self.setup():
            return EXIT_USAGE_ERROR

        try:
            p = ParamPoint(s=s, q=q, gamma_r=gamma_r, gamma_i=gamma_i)
            cfg = self.config_manager.build_optical_config(alpha, q)
            unit = cfg.delta / (4.0 * cfg.sigma**2)
            print_info(f"{p} with alpha={cfg.alpha:g}; informations {UNITS_NOTE}")
            print()

            state = await self.state_use_case.get_state(p, cfg)
            purity = await self.state_use_case.get_purity(p, cfg)
            print_state(state, purity)

            norms = await self.sld_use_case.get_commutator_norms(p, cfg)
            print_commutators(norms)

            measurement = BinaryPOVM(povm)
            spade = await self.measurement_use_case.get_spade_fisher(p, cfg, measurement)
            counting = await self.measurement_use_case.get_counting_fisher(p, cfg)
            print_info(f"Separation Fisher information of {povm}: {spade / unit:.6g}")
            print()
            print_matrix("Photon-counting Fisher information", counting, unit)

            quantities: List[Dict[str, Any]] = [
                {"quantity": "n_bar", "value": state.n_bar},
                {"quantity": "purity", "value": purity.r},
                {"quantity": "purity_incoherent", "value": purity.r_inc},
                {"quantity": "purity_large_separation", "value": purity.r_inf},
                {"quantity": f"fisher_{povm}", "value": spade},
                {"quantity": "counting_fisher_s", "value": counting.entry(PARAM_S)},
            ]
            quantities.extend(
                {"quantity": f"weak_commutator_{first}_{second}", "value": trace}
                for (first, second), (_, trace) in norms.items()
            )

            if oracle:
                order = int(self.config_manager.get_setting("oracle.hg_order", HG_ORDER))
                step = float(self.config_manager.get_setting("oracle.fd_step", FD_STEP))
                numeric = await self.oracle_use_case.get_numeric_qfi(p, cfg, order, step)
                closed = await self.bounds_use_case.get_qfi(p, cfg)
                print_matrix("Closed-form QFI", closed)
                print_matrix(f"Oracle QFI ({order} Hermite-Gauss modes)", numeric)
                quantities.append({"quantity": "oracle_qfi_s", "value": numeric.entry(PARAM_S)})
                quantities.append({"quantity": "closed_form_qfi_s", "value": closed.entry(PARAM_S)})

            if output:
                metadata = {
                    "tool_version": VERSION,
                    "delta": cfg.delta,
                    "sigma": cfg.sigma,
                    "alpha": cfg.alpha,
                    "povm": povm,
                    **p.dict(),
                }
                repository = self.figure_use_case.dataset_repository
                path = await repository.save_table(pd.DataFrame(quantities), output, metadata)
                print_success(f"Quantities written to {path}")
            return EXIT_SUCCESS

        except CoherentImagingError as e:
            return self.fail(e, "Inspection failed")
