"""Unit tests for DatasetRepository implementation."""

from pathlib import Path
from unittest.mock import Mock

import pandas as pd
import pytest

from coherent_imaging.core.api.exceptions import PersistenceError
from coherent_imaging.core.api.models.domain.figures import FigureDataset
from coherent_imaging.core.api.models.domain.measurement import DetectionRecord
from coherent_imaging.core.api.models.dto.validation_row_dto import ValidationRowDTO
from coherent_imaging.core.file_manager import FileManager
from coherent_imaging.core.repositories.implementations.dataset_repository_impl import (
    DatasetRepositoryImpl,
)
from coherent_imaging.core.repositories.interfaces.dataset_repository import DatasetRepository


@pytest.mark.unit
class TestDatasetRepository:
    """Test cases for DatasetRepository implementation."""

    @pytest.fixture
    def mock_file_manager(self):
        """Create a mock FileManager that accepts every write."""
        file_manager = Mock(spec=FileManager)
        file_manager.save_csv.return_value = True
        file_manager.get_file_path.side_effect = lambda name: Path("/data") / name
        return file_manager

    @pytest.fixture
    def repository(self, mock_file_manager):
        """Create DatasetRepository with a mocked file manager."""
        return DatasetRepositoryImpl(file_manager=mock_file_manager)

    @pytest.fixture
    def dataset(self):
        """A two-row figure dataset with one skipped point."""
        dataset = FigureDataset(figure_id="fig1", columns=["s", "value"], metadata={"seed": 1})
        dataset.add_row({"s": 0.1, "value": 0.98})
        dataset.add_skipped({"s": 0.0}, "singular state")
        return dataset

    def test_implements_interface(self, repository):
        assert isinstance(repository, DatasetRepository)

    @pytest.mark.asyncio
    async def test_save_figure_defaults_to_figure_id(self, repository, mock_file_manager, dataset):
        # Act
        path = await repository.save_figure(dataset)

        # Assert
        assert path == Path("/data/fig1.csv")
        name, frame, metadata = mock_file_manager.save_csv.call_args.args
        assert name == "fig1.csv"
        assert list(frame.columns) == ["s", "value", "status", "reason"]
        assert len(frame) == 2
        assert metadata == {"seed": 1}

    @pytest.mark.asyncio
    async def test_save_figure_explicit_path(self, repository, mock_file_manager, dataset):
        path = await repository.save_figure(dataset, "custom/out.csv")

        assert path == Path("/data/custom/out.csv")
        assert mock_file_manager.save_csv.call_args.args[0] == "custom/out.csv"

    @pytest.mark.asyncio
    async def test_failed_write_raises(self, repository, mock_file_manager, dataset):
        mock_file_manager.save_csv.return_value = False

        with pytest.raises(PersistenceError):
            await repository.save_figure(dataset)

    @pytest.mark.asyncio
    async def test_save_records_keeps_integer_seed(self, repository, mock_file_manager):
        # Arrange
        records = [
            DetectionRecord(slot_count=10, n_vacuum=8, n_out0=1, n_out1=1, trial=0, seed=7),
            DetectionRecord(slot_count=10, n_vacuum=9, n_out0=1, n_out1=0, trial=1, seed=7),
        ]

        # Act
        await repository.save_records(records, "records.csv", {"seed": 7})

        # Assert
        frame = mock_file_manager.save_csv.call_args.args[1]
        assert list(frame.columns) == ["trial", "slots", "n_vacuum", "n_out0", "n_out1", "seed"]
        assert str(frame["seed"].dtype) == "Int64"
        assert frame["n_vacuum"].tolist() == [8, 9]

    @pytest.mark.asyncio
    async def test_load_records(self, repository, mock_file_manager):
        mock_file_manager.load_csv.return_value = pd.DataFrame(
            {
                "trial": [0, 1],
                "slots": [10, 10],
                "n_vacuum": [8, 9],
                "n_out0": [1, 1],
                "n_out1": [1, 0],
                "seed": [None, None],
            }
        )

        records = await repository.load_records("records.csv")

        assert [r.n_vacuum for r in records] == [8, 9]
        assert records[1].trial == 1
        assert records[0].seed is None

    @pytest.mark.asyncio
    async def test_load_records_missing_columns(self, repository, mock_file_manager):
        mock_file_manager.load_csv.return_value = pd.DataFrame({"trial": [0]})

        with pytest.raises(PersistenceError, match="lacks columns"):
            await repository.load_records("records.csv")

    @pytest.mark.asyncio
    async def test_load_missing_table(self, repository, mock_file_manager):
        mock_file_manager.load_csv.return_value = None

        with pytest.raises(PersistenceError):
            await repository.load_table("absent.csv")

    @pytest.mark.asyncio
    async def test_save_validation_report(self, repository, mock_file_manager):
        rows = [
            ValidationRowDTO(
                check="oracle_qfi",
                grid_point="s=0.5",
                entry="s/s",
                closed_form=1.0,
                oracle=1.0,
                rel_error=0.0,
                tolerance=1e-6,
                passed=True,
            )
        ]

        await repository.save_validation_report(rows, "validation.csv", {"preset": "quick"})

        frame = mock_file_manager.save_csv.call_args.args[1]
        assert frame.loc[0, "check"] == "oracle_qfi"
        assert bool(frame.loc[0, "passed"]) is True
