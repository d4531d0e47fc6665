"""Unit tests for CLI display utilities."""

from io import StringIO
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

from cli.utils.display import (
    print_command_header,
    print_error,
    print_figure_summary,
    print_header,
    print_matrix,
    print_simulation_summary,
    print_success,
    print_validation_report,
)
from coherent_imaging.core.api.models.domain.bounds import BoundMatrix
from coherent_imaging.core.api.models.domain.figures import FigureDataset
from coherent_imaging.core.api.models.domain.measurement import MleResult
from coherent_imaging.core.api.models.domain.validation import SimulationSummary, ValidationReport
from coherent_imaging.core.api.models.dto.validation_row_dto import ValidationRowDTO
from coherent_imaging.core.const import KIND_VAN_TREES


@pytest.mark.unit
@pytest.mark.display
class TestDisplayFunctions:
    """Test display utility functions."""

    @patch("sys.stdout", new_callable=StringIO)
    def test_headers_and_messages(self, mock_stdout):
        print_header("TEST HEADER")
        print_command_header("figure", "Dataset for fig1")
        print_success("done")
        print_error("failed")

        output = mock_stdout.getvalue()
        assert "=" * 60 in output
        assert "🔭 TEST HEADER" in output
        assert "COHERENT IMAGING - FIGURE" in output
        assert "✅ done" in output
        assert "❌ failed" in output

    @patch("sys.stdout", new_callable=StringIO)
    def test_matrix_in_units(self, mock_stdout):
        matrix = BoundMatrix(entries=np.eye(4) * 0.0025, kind=KIND_VAN_TREES)

        print_matrix("van Trees information", matrix, unit=0.0025)

        lines = mock_stdout.getvalue().splitlines()
        assert "gamma_r" in lines[1]
        assert lines[2].split() == ["s", "1", "0", "0", "0"]

    @patch("sys.stdout", new_callable=StringIO)
    def test_figure_summary_truncates_skipped(self, mock_stdout):
        dataset = FigureDataset(figure_id="fig2", columns=["q"])
        for k in range(7):
            dataset.add_skipped({"q": float(k)}, f"reason {k}")

        print_figure_summary(dataset, "/data/fig2.csv")

        output = mock_stdout.getvalue()
        assert "Figure fig2: 0 rows" in output
        assert "7 singular point(s) skipped" in output
        assert "reason 4" in output
        assert "reason 5" not in output
        assert "... and 2 more" in output
        assert "/data/fig2.csv" in output

    @patch("sys.stdout", new_callable=StringIO)
    def test_validation_report_counts(self, mock_stdout):
        rows = [
            ValidationRowDTO("oracle_qfi", "p", "s/s", 1.0, 1.0, 0.0, 1e-6, True),
            ValidationRowDTO("sld_residual", "p", "s", 1.0, 0.0, 1.0, 1e-8, False),
        ]

        print_validation_report(ValidationReport(preset="quick", rows=rows, path=Path("/data/v.csv")))

        output = mock_stdout.getvalue()
        assert "✅ oracle_qfi: 1 passed, 0 failed" in output
        assert "❌ sld_residual: 0 passed, 1 failed" in output

    @patch("sys.stdout", new_callable=StringIO)
    def test_simulation_summary(self, mock_stdout):
        mle = MleResult(theta_hat={"s": 0.5}, sample_variance={"s": 2e-3}, estimates={"s": [0.47, 0.53]})

        print_simulation_summary(SimulationSummary(mle=mle, crb={"s": 1e-3}, empirical_fisher=0.0024))

        output = mock_stdout.getvalue()
        assert "Trials: 2" in output
        assert "variance / bound = 2.0000" in output
        assert "0.0024" in output
