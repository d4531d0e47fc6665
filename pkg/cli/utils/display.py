"""Display utilities for the CLI."""

import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from coherent_imaging.core.api.models.domain.bounds import BoundMatrix
from coherent_imaging.core.api.models.domain.figures import FigureDataset
from coherent_imaging.core.api.models.domain.state import BlochState, PurityReport
from coherent_imaging.core.api.models.domain.validation import SimulationSummary, ValidationReport

logger = logging.getLogger(__name__)


def print_header(title: str) -> None:
    """Print a framed header."""
    print("\n" + "=" * 60)
    print(f"🔭 {title}")
    print("=" * 60)


def print_success(message: str) -> None:
    """Print a success message."""
    print(f"✅ {message}")


def print_error(message: str) -> None:
    """Print an error message."""
    print(f"❌ {message}")


def print_info(message: str) -> None:
    """Print an informational message."""
    print(f"ℹ️  {message}")


def print_warning(message: str) -> None:
    """Print a warning."""
    print(f"⚠️  {message}")


def print_command_header(command: str, description: str) -> None:
    """Print the header of a command."""
    print_header(f"COHERENT IMAGING - {command.upper()}")
    print_info(description)
    print()


def print_matrix(title: str, matrix: BoundMatrix, unit: Optional[float] = None) -> None:
    """Print a 4x4 matrix with parameter labels; entries divided by ``unit`` when given."""
    entries = matrix.entries if unit is None else matrix.entries / unit
    names: Sequence[str] = matrix.names
    print(f"📐 {title}")
    print("   " + " " * 8 + "".join(f"{name:>14}" for name in names))
    for name, row in zip(names, entries):
        print(f"   {name:<8}" + "".join(f"{value:>14.6g}" for value in row))
    print()


def print_state(state: BlochState, purity: PurityReport) -> None:
    """Print the Bloch vector, photon number and purity references."""
    x, y, z = state.r_vec
    print(f"🔵 Bloch vector ({x:.6g}, {y:.6g}, {z:.6g}), overlap c = {state.c:.6g}")
    print(f"   n_bar = {state.n_bar:.6g}")
    print(f"   purity r = {purity.r:.8g} (incoherent {purity.r_inc:.8g}, large separation {purity.r_inf:.8g})")
    if not purity.bijective:
        print_warning(f"Purity is not monotone in s; minimum at s0 = {purity.s0:.6g}")
    print()


def print_commutators(norms: Dict[Tuple[str, str], Tuple[float, float]]) -> None:
    """Print ||[L_i, L_j]|| and |tr(rho [L_i, L_j])| for every SLD pair."""
    print("🔀 SLD commutators")
    print(f"   {'pair':<18}{'norm':>14}{'weak trace':>14}")
    for (first, second), (norm, trace) in norms.items():
        print(f"   {first + '/' + second:<18}{norm:>14.6g}{trace:>14.6g}")
    print()


def print_figure_summary(dataset: FigureDataset, path: Optional[str] = None) -> None:
    """Print row counts and skipped points of a figure dataset."""
    print_success(f"Figure {dataset.figure_id}: {len(dataset.ok_rows)} rows")
    skipped = dataset.skipped_rows
    if skipped:
        print_warning(f"{len(skipped)} singular point(s) skipped")
        for row in skipped[:5]:
            print(f"   ⏭️  {row['reason']}")
        if len(skipped) > 5:
            print(f"   ... and {len(skipped) - 5} more")
    if path:
        print_info(f"Dataset written to {path}")


def print_validation_report(report: ValidationReport) -> None:
    """Print per-check pass counts of a validation report."""
    checks: Dict[str, Dict[str, int]] = {}
    for row in report.rows:
        counts = checks.setdefault(row.check, {"passed": 0, "failed": 0})
        counts["passed" if row.passed else "failed"] += 1
    for check, counts in checks.items():
        icon = "✅" if counts["failed"] == 0 else "❌"
        print(f"   {icon} {check}: {counts['passed']} passed, {counts['failed']} failed")
    if report.path:
        print_info(f"Report written to {report.path}")


def print_simulation_summary(summary: SimulationSummary) -> None:
    """Print estimates, variances and their ratio to the bound."""
    ratios = summary.variance_ratio
    print(f"🎲 Trials: {summary.mle.n_trials}")
    for name, estimate in summary.mle.theta_hat.items():
        variance = summary.mle.sample_variance[name]
        crb = summary.crb.get(name, np.nan)
        print(f"   {name}: mean {estimate:.6g}, variance {variance:.4g}, bound {crb:.4g}")
        if name in ratios:
            print(f"      variance / bound = {ratios[name]:.4f}")
    if summary.empirical_fisher is not None:
        print(f"   📊 Observed score variance per slot: {summary.empirical_fisher:.6g}")
    if summary.records_path:
        print_info(f"Records written to {summary.records_path}")
