#!/usr/bin/env python3
"""Coherent Imaging CLI - bounds for two partially coherent point sources."""

import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from coherent_imaging.core.api.models.domain.figures import LINEAR, LOG
from coherent_imaging.core.const import (
    ALPHA_CENTROID,
    ALPHA_GEOMETRIC,
    EXIT_SUCCESS,
    EXIT_VALIDATION_FAILURE,
    FIGURE_IDS,
    PARAMETER_NAMES,
    POVM_KINDS,
    POVM_PROJECTOR_V,
    PRESET_DEFAULT,
    PRESET_QUICK,
)
from coherent_imaging.core.file_manager import FileManager

from .commands.bound import BoundCommand
from .commands.figure import FigureCommand
from .commands.inspect import InspectCommand
from .commands.simulate import SimulateCommand
from .commands.sweep import SweepCommand
from .commands.validate import ValidateCommand
from .utils.display import print_error, print_header, print_info

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False):
    """Setup logging configuration."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = argparse.ArgumentParser(
        prog="coherent_imaging",
        description="Coherent Imaging CLI - quantum and van Trees bounds for two partially coherent sources",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Figure datasets
  coherent_imaging figure fig1
  coherent_imaging figure fig6 --points 81 --output fig6.csv

  # Cross-checks against the numeric oracle
  coherent_imaging validate --preset quick

  # Monte Carlo estimation
  coherent_imaging simulate scenarios/acceptance.ini

  # One parameter point
  coherent_imaging bound --s 0.5 --q 0.3 --gr 0.4 --gi 0.1 --alpha centroid
  coherent_imaging inspect --s 0.5 --q 0.3 --gr 0.4 --povm projector_e --oracle

  # One-parameter sweep with the others held fixed
  coherent_imaging sweep s 0.01 3 --scale log --points 30 --q 0.5 --gr -0.5

Exit codes: 0 success, 1 validation or runtime failure, 2 usage error.
        """,
    )

    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose logging"
    )
    parser.add_argument(
        "--data-dir", help="Directory for configuration, logs and default outputs"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    figure_parser = subparsers.add_parser("figure", help="Generate a figure dataset")
    figure_parser.add_argument("figure_id", choices=FIGURE_IDS, help="Figure identifier")
    figure_parser.add_argument("--output", help="CSV output path")
    figure_parser.add_argument("--points", type=int, help="Sweep resolution")
    figure_parser.add_argument("--workers", type=int, help="Worker threads")
    figure_parser.add_argument("--delta", type=float, help="Mean photon number per slot")
    figure_parser.add_argument("--sigma", type=float, help="PSF width")
    figure_parser.add_argument(
        "--gamma", type=float, nargs="+", help="Coherence values of the figure legend"
    )

    validate_parser = subparsers.add_parser("validate", help="Run the numeric cross-checks")
    validate_parser.add_argument(
        "--preset", choices=[PRESET_QUICK, PRESET_DEFAULT], default=PRESET_DEFAULT, help="Grid preset"
    )
    validate_parser.add_argument("--output", help="CSV report path")

    simulate_parser = subparsers.add_parser("simulate", help="Run a Monte Carlo scenario")
    simulate_parser.add_argument("scenario", help="Scenario file")
    simulate_parser.add_argument("--output", help="CSV records path")

    bound_parser = subparsers.add_parser("bound", help="Bounds at one parameter point")
    _add_point_arguments(bound_parser, required=True)
    bound_parser.add_argument("--output", help="CSV output path for the matrices")

    inspect_parser = subparsers.add_parser("inspect", help="State, SLDs and measurements at one point")
    _add_point_arguments(inspect_parser, required=True)
    inspect_parser.add_argument(
        "--povm", choices=POVM_KINDS, default=POVM_PROJECTOR_V, help="Binary SPADE measurement"
    )
    inspect_parser.add_argument(
        "--oracle", action="store_true", help="Also compute the Hermite-Gauss oracle QFI"
    )
    inspect_parser.add_argument("--output", help="CSV output path for the quantities")

    sweep_parser = subparsers.add_parser("sweep", help="Bounds along one parameter")
    sweep_parser.add_argument("parameter", choices=PARAMETER_NAMES, help="Swept parameter")
    sweep_parser.add_argument("start", type=float, help="First value")
    sweep_parser.add_argument("stop", type=float, help="Last value")
    sweep_parser.add_argument("--points", type=int, default=21, help="Number of values")
    sweep_parser.add_argument("--scale", choices=[LINEAR, LOG], default=LINEAR, help="Grid spacing")
    _add_point_arguments(sweep_parser, required=False)
    sweep_parser.add_argument("--output", help="CSV output path for the sweep")

    return parser


def _add_point_arguments(parser: argparse.ArgumentParser, required: bool) -> None:
    """Parameter-point options shared by the point and sweep commands."""
    defaults = {} if required else {"default": 0.5}
    parser.add_argument("--s", type=float, required=required, help="Separation", **defaults)
    parser.add_argument("--q", type=float, required=required, help="Relative intensity", **defaults)
    parser.add_argument("--gr", type=float, default=0.0, help="Real part of the coherence")
    parser.add_argument("--gi", type=float, default=0.0, help="Imaginary part of the coherence")
    parser.add_argument(
        "--alpha", help=f"Frame weight: {ALPHA_GEOMETRIC}, {ALPHA_CENTROID} or a number in [0, 1]"
    )


async def main(argv: Optional[List[str]] = None) -> int:
    """Main function."""
    parser = create_parser()
    args = parser.parse_args(argv)

    setup_logging(args.verbose)

    print_header("COHERENT IMAGING CLI")
    print_info("Quantum limits for resolving two partially coherent sources")
    print()

    file_manager = FileManager(args.data_dir) if args.data_dir else None

    try:
        if args.command == "figure":
            command = FigureCommand(file_manager)
            return await command.execute(
                args.figure_id,
                output=args.output,
                points=args.points,
                workers=args.workers,
                delta=args.delta,
                sigma=args.sigma,
                gamma_legend=args.gamma,
            )

        if args.command == "validate":
            command = ValidateCommand(file_manager)
            return await command.execute(args.preset, output=args.output)

        if args.command == "simulate":
            command = SimulateCommand(file_manager)
            return await command.execute(args.scenario, output=args.output)

        if args.command == "bound":
            command = BoundCommand(file_manager)
            return await command.execute(
                s=args.s,
                q=args.q,
                gamma_r=args.gr,
                gamma_i=args.gi,
                alpha=args.alpha,
                output=args.output,
            )

        if args.command == "inspect":
            command = InspectCommand(file_manager)
            return await command.execute(
                s=args.s,
                q=args.q,
                gamma_r=args.gr,
                gamma_i=args.gi,
                alpha=args.alpha,
                povm=args.povm,
                oracle=args.oracle,
                output=args.output,
            )

        if args.command == "sweep":
            command = SweepCommand(file_manager)
            fixed = {"s": args.s, "q": args.q, "gamma_r": args.gr, "gamma_i": args.gi}
            return await command.execute(
                args.parameter,
                args.start,
                args.stop,
                points=args.points,
                scale=args.scale,
                fixed=fixed,
                alpha=args.alpha,
                output=args.output,
            )

        parser.print_help()
        return EXIT_SUCCESS

    except KeyboardInterrupt:
        print("\n⏹️  Interrupted by user")
        return EXIT_VALIDATION_FAILURE

    except Exception as e:
        logger.exception("Unexpected error")
        print_error(f"Unexpected error: {e}")
        return EXIT_VALIDATION_FAILURE


if __name__ == "__main__":
    exit_code = asyncio.run(main())
    sys.exit(exit_code)
