"""Unit tests for the figure use case."""

from pathlib import Path
from unittest.mock import AsyncMock, Mock

import numpy as np
import pytest

from coherent_imaging.core.api.exceptions import ConfigurationError, SingularStateError
from coherent_imaging.core.api.models.domain.figures import FigureDataset, FigureOptions
from coherent_imaging.core.const import FIGURE_IDS, STATUS_SKIPPED
from coherent_imaging.core.repositories.interfaces.dataset_repository import DatasetRepository
from coherent_imaging.core.use_cases.implementations import figure_use_case_impl
from coherent_imaging.core.use_cases.implementations.figure_use_case_impl import (
    FIGURE_PLANS,
    FigurePlan,
    FigureUseCaseImpl,
)
from coherent_imaging.core.use_cases.interfaces.figure_use_case import FigureUseCase


@pytest.mark.unit
class TestFigureUseCase:
    """Test cases for figure dataset generation."""

    @pytest.fixture
    def mock_dataset_repository(self):
        repository = Mock(spec=DatasetRepository)
        repository.save_figure = AsyncMock(return_value=Path("/data/fig1.csv"))
        return repository

    @pytest.fixture
    def use_case(self, mock_dataset_repository):
        return FigureUseCaseImpl(dataset_repository=mock_dataset_repository)

    @pytest.fixture
    def options(self):
        return FigureOptions(points=5, gamma_legend=(0.0, 0.5), workers=2)

    def test_implements_interface(self, use_case):
        assert isinstance(use_case, FigureUseCase)

    def test_every_figure_has_a_plan(self):
        assert set(FIGURE_PLANS) == set(FIGURE_IDS)

    @pytest.mark.asyncio
    async def test_unknown_figure(self, use_case, options):
        with pytest.raises(ConfigurationError):
            await use_case.run_figure("fig99", options)

    @pytest.mark.asyncio
    async def test_incoherent_separation_entry_is_one_unit(self, use_case, options):
        # Act
        dataset = await use_case.run_figure("fig1", options)

        # Assert
        vt = dataset.column("vt_ss", where={"gamma_r": 0.0})
        classical = dataset.column("classical_ss", where={"gamma_r": 0.0})
        assert len(vt) == options.points
        np.testing.assert_allclose(vt, 1.0, rtol=1e-3)
        np.testing.assert_allclose(classical, 0.0, atol=1e-9)

    @pytest.mark.asyncio
    async def test_raw_columns_carry_the_unit(self, use_case, options):
        dataset = await use_case.run_figure("fig1", options)

        scaled = dataset.column("vt_qq")
        raw = dataset.column("vt_qq_raw")
        np.testing.assert_allclose(raw, scaled * options.figure_unit)
        assert dataset.metadata["figure_id"] == "fig1"
        assert dataset.metadata["delta"] == options.delta

    @pytest.mark.asyncio
    async def test_grid_order_is_kept(self, use_case, options):
        dataset = await use_case.run_figure("fig2", options)

        gammas = [row["gamma_r"] for row in dataset.rows]
        qs = [row["q"] for row in dataset.rows]
        assert gammas == [g for g in options.gamma_legend for _ in range(options.points)]
        assert qs == pytest.approx(list(np.linspace(0.0, 1.0, options.points)) * 2)

    @pytest.mark.asyncio
    async def test_misalignment_vanishes_for_equal_intensities(self, use_case, options):
        dataset = await use_case.run_figure("fig7", options)

        rel_diff = dataset.column("rel_diff", where={"q": 0.5})
        assert len(rel_diff) == 2
        np.testing.assert_allclose(rel_diff, 0.0, atol=1e-9)

    @pytest.mark.asyncio
    async def test_purity_minimum_only_for_anticorrelated_sources(self, use_case, options):
        dataset = await use_case.run_figure("purity", options)

        anticorrelated = [row for row in dataset.ok_rows if row["gamma_r"] < 0]
        correlated = [row for row in dataset.ok_rows if row["gamma_r"] > 0]
        assert anticorrelated and correlated
        assert all(row["s0_over_sigma"] > 0 for row in anticorrelated)
        assert all(row["s0_over_sigma"] is None for row in correlated)

    @pytest.mark.asyncio
    async def test_singular_points_are_recorded(self, use_case, options, monkeypatch):
        # Arrange
        def evaluate(key):
            if key["x"] > 1.0:
                raise SingularStateError("rank deficient")
            return {"value": key["x"]}

        plan = FigurePlan(
            key_columns=["x"],
            keys=[{"x": 0.5}, {"x": 2.0}],
            evaluate=evaluate,
            alpha="geometric",
            information_columns=["value"],
        )
        monkeypatch.setitem(figure_use_case_impl.FIGURE_PLANS, "fig5", lambda _: plan)

        # Act
        dataset = await use_case.run_figure("fig5", options)

        # Assert
        assert len(dataset.ok_rows) == 1
        assert dataset.ok_rows[0]["value"] == pytest.approx(0.5 / options.figure_unit)
        skipped = dataset.skipped_rows[0]
        assert skipped["status"] == STATUS_SKIPPED
        assert skipped["x"] == 2.0
        assert skipped["value"] is None
        assert "SingularStateError" in skipped["reason"]

    @pytest.mark.asyncio
    async def test_non_finite_values_are_skipped(self, use_case, options, monkeypatch):
        plan = FigurePlan(
            key_columns=["x"],
            keys=[{"x": 1.0}],
            evaluate=lambda key: {"value": float("nan")},
            alpha="geometric",
            plain_columns=["value"],
        )
        monkeypatch.setitem(figure_use_case_impl.FIGURE_PLANS, "fig5", lambda _: plan)

        dataset = await use_case.run_figure("fig5", options)

        assert dataset.skipped_rows[0]["reason"] == "non-finite value"

    @pytest.mark.asyncio
    async def test_save_figure_delegates(self, use_case, mock_dataset_repository):
        dataset = FigureDataset(figure_id="fig1", columns=["s"])

        path = await use_case.save_figure(dataset, "out.csv")

        assert path == Path("/data/fig1.csv")
        mock_dataset_repository.save_figure.assert_awaited_once_with(dataset, "out.csv")
