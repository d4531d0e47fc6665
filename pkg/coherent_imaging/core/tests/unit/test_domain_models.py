"""Unit tests for domain models and DTOs."""

from pathlib import Path

import numpy as np
import pytest

from coherent_imaging.core.api.exceptions import ConfigurationError, DomainError
from coherent_imaging.core.api.models.domain.bounds import BoundMatrix
from coherent_imaging.core.api.models.domain.figures import FigureDataset, FigureOptions, SweepSpec
from coherent_imaging.core.api.models.domain.measurement import DetectionRecord, MleResult
from coherent_imaging.core.api.models.domain.params import (
    OpticalConfig,
    ParamPoint,
    resolve_alpha,
)
from coherent_imaging.core.api.models.domain.validation import SimulationSummary, ValidationReport
from coherent_imaging.core.api.models.dto.detection_record_dto import DetectionRecordDTO
from coherent_imaging.core.api.models.dto.validation_row_dto import ValidationRowDTO
from coherent_imaging.core.const import (
    ALPHA_CENTROID,
    ALPHA_GEOMETRIC,
    EXIT_SUCCESS,
    EXIT_VALIDATION_FAILURE,
    KIND_QFI_STATE,
    STATUS_OK,
)


def _row(check: str, passed: bool) -> ValidationRowDTO:
    return ValidationRowDTO(
        check=check,
        grid_point="s=0.5",
        entry="s",
        closed_form=0.0,
        oracle=0.0,
        rel_error=0.0 if passed else 1.0,
        tolerance=1e-8,
        passed=passed,
    )


@pytest.mark.unit
class TestParamPoint:
    """Test ParamPoint validation and helpers."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"s": -0.1, "q": 0.5},
            {"s": 0.1, "q": 1.2},
            {"s": 0.1, "q": 0.5, "gamma_r": 0.8, "gamma_i": 0.8},
            {"s": float("nan"), "q": 0.5},
        ],
    )
    def test_out_of_domain(self, kwargs):
        with pytest.raises(DomainError):
            ParamPoint(**kwargs)

    def test_fully_coherent_edge_is_allowed(self):
        p = ParamPoint(s=0.1, q=0.5, gamma_r=0.6, gamma_i=0.8)

        assert p.is_fully_coherent

    def test_array_round_trip_and_with_value(self):
        p = ParamPoint(s=0.4, q=0.3, gamma_r=0.2, gamma_i=-0.1)

        assert ParamPoint.from_array(p.as_array()) == p
        assert p.with_value("q", 0.6).q == 0.6
        with pytest.raises(DomainError):
            p.with_value("width", 1.0)


@pytest.mark.unit
class TestOpticalConfig:
    """Test OpticalConfig and frame policies."""

    def test_source_positions(self):
        cfg = OpticalConfig(alpha=0.25)

        assert cfg.source_positions(2.0) == pytest.approx((-1.5, 0.5))

    def test_invalid_values(self):
        with pytest.raises(DomainError):
            OpticalConfig(sigma=0.0)
        with pytest.raises(ConfigurationError):
            OpticalConfig(delta=0.0)
        with pytest.raises(DomainError):
            OpticalConfig(alpha=1.5)

    @pytest.mark.parametrize(
        "policy,expected",
        [(ALPHA_GEOMETRIC, 0.5), (ALPHA_CENTROID, 0.3), ("0.7", 0.7), (0.2, 0.2)],
    )
    def test_resolve_alpha(self, policy, expected):
        assert resolve_alpha(policy, 0.3) == pytest.approx(expected)

    def test_unknown_policy(self):
        with pytest.raises(ConfigurationError):
            resolve_alpha("midpoint", 0.3)


@pytest.mark.unit
class TestBoundMatrix:
    """Test BoundMatrix."""

    def test_symmetrized_and_indexed(self):
        entries = np.diag([4.0, 3.0, 2.0, 1.0])
        entries[0, 1] = 1.0

        matrix = BoundMatrix(entries=entries, kind=KIND_QFI_STATE)

        assert matrix.entry("s", "q") == pytest.approx(0.5)
        assert matrix.entry("q", "s") == pytest.approx(0.5)
        assert matrix.entry("gamma_i") == 1.0
        assert matrix.is_symmetric()
        assert matrix.is_psd()

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            BoundMatrix(entries=np.eye(3), kind=KIND_QFI_STATE)

    def test_figure_units(self):
        matrix = BoundMatrix(entries=np.eye(4) * 0.0025, kind=KIND_QFI_STATE)

        np.testing.assert_allclose(matrix.in_figure_units(delta=0.01, sigma=1.0), np.eye(4))


@pytest.mark.unit
class TestFigureModels:
    """Test FigureDataset, SweepSpec and FigureOptions."""

    def test_unknown_columns_rejected(self):
        dataset = FigureDataset(figure_id="fig2", columns=["q"])

        with pytest.raises(ValueError):
            dataset.add_row({"q": 0.1, "extra": 1.0})

    def test_rows_get_status(self):
        dataset = FigureDataset(figure_id="fig2", columns=["q", "value"])
        dataset.add_row({"q": 0.1, "value": 2.0})
        dataset.add_skipped({"q": 0.0}, "boundary")

        assert dataset.rows[0]["status"] == STATUS_OK
        assert dataset.column("value").tolist() == [2.0]
        assert list(dataset.to_frame().columns) == ["q", "value", "status", "reason"]

    def test_unknown_figure(self):
        with pytest.raises(ConfigurationError):
            FigureDataset(figure_id="fig0", columns=[])

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"parameter": "width", "start": 0.0, "stop": 1.0, "points": 5},
            {"parameter": "s", "start": 0.0, "stop": 1.0, "points": 1},
            {"parameter": "s", "start": 0.0, "stop": 1.0, "points": 5, "scale": "log"},
            {"parameter": "q", "start": 0.0, "stop": 1.5, "points": 5},
        ],
    )
    def test_invalid_sweeps(self, kwargs):
        with pytest.raises(ConfigurationError):
            SweepSpec(**kwargs)

    def test_sweep_grids(self):
        assert SweepSpec("s", 1e-2, 1.0, 3, scale="log").grid() == pytest.approx([1e-2, 1e-1, 1.0])
        assert SweepSpec("q", 0.0, 1.0, 3).grid() == pytest.approx([0.0, 0.5, 1.0])

    def test_options(self):
        assert FigureOptions(delta=0.02, sigma=2.0).figure_unit == pytest.approx(0.02 / 16)
        with pytest.raises(ConfigurationError):
            FigureOptions(gamma_legend=(0.0, 1.2))
        with pytest.raises(ConfigurationError):
            FigureOptions(workers=0)


@pytest.mark.unit
class TestDetectionRecord:
    """Test DetectionRecord and its DTO."""

    def test_counts_must_add_up(self):
        with pytest.raises(ValueError):
            DetectionRecord(slot_count=10, n_vacuum=5, n_out0=1, n_out1=1)
        with pytest.raises(ValueError):
            DetectionRecord(slot_count=0, n_vacuum=-1, n_out0=1, n_out1=0)

    def test_merge_pools_counts(self):
        first = DetectionRecord(slot_count=10, n_vacuum=8, n_out0=1, n_out1=1, trial=2, seed=3)
        second = DetectionRecord(slot_count=5, n_vacuum=5, n_out0=0, n_out1=0, trial=1, seed=3)

        merged = first.merge(second)

        assert merged.counts.tolist() == [13, 1, 1]
        assert merged.photons == 2
        assert merged.trial == 1

    def test_dto_from_csv_strings(self):
        dto = DetectionRecordDTO.from_dict(
            {"trial": "4", "slots": "10", "n_vacuum": "9", "n_out0": "1", "n_out1": "0", "seed": ""}
        )

        record = DetectionRecord.from_dto(dto)

        assert record.trial == 4
        assert record.seed is None
        assert record.to_dto() == dto


@pytest.mark.unit
class TestRunModels:
    """Test ValidationReport and SimulationSummary."""

    def test_report_failures_and_exit_code(self):
        report = ValidationReport(preset="quick", rows=[_row("oracle_qfi", True), _row("sld_residual", False)])

        assert report.failures == ["sld_residual"]
        assert report.exit_code == EXIT_VALIDATION_FAILURE
        assert report.dict()["rows"] == 2

    def test_passing_report(self):
        report = ValidationReport(preset="quick", rows=[_row("oracle_qfi", True)], path=Path("/data/v.csv"))

        assert report.passed
        assert report.exit_code == EXIT_SUCCESS
        assert report.dict()["path"] == "/data/v.csv"

    def test_variance_ratio(self):
        mle = MleResult(
            theta_hat={"s": 0.5, "q": 0.3},
            sample_variance={"s": 2e-3, "q": 1e-3},
            estimates={"s": [0.49, 0.51], "q": [0.3, 0.3]},
        )

        summary = SimulationSummary(mle=mle, crb={"s": 1e-3, "q": 0.0})

        assert summary.variance_ratio == {"s": pytest.approx(2.0)}
        assert summary.dict()["n_trials"] == 2
