"""Unit tests for ScenarioRepository implementation."""

from unittest.mock import Mock

import pytest

from coherent_imaging.core.api.exceptions import ScenarioParseError
from coherent_imaging.core.const import ALPHA_GEOMETRIC
from coherent_imaging.core.file_manager import FileManager
from coherent_imaging.core.repositories.implementations.scenario_repository_impl import (
    ScenarioRepositoryImpl,
)

MINIMAL = """
[parameters]
s = 0.5
q = 0.5

[simulation]
slots = 1000
"""

FULL = """# acceptance run
[parameters]
s = 0.5
q = 0.3
gamma_r = -0.2
gamma_i = 0.1

[optics]
sigma = 2
delta = 0.05
alpha = 0.3

; binary measurement
[measurement]
povm = projector_v

[simulation]
slots = 1000000
repetitions = 200
seed = 2024
free = s, q
output = runs/acceptance.csv
"""


@pytest.mark.unit
class TestScenarioRepository:
    """Test cases for the scenario file parser."""

    @pytest.fixture
    def mock_file_manager(self):
        return Mock(spec=FileManager)

    @pytest.fixture
    def repository(self, mock_file_manager):
        return ScenarioRepositoryImpl(file_manager=mock_file_manager)

    def test_minimal_scenario_gets_defaults(self, repository):
        scenario = repository.parse_scenario(MINIMAL)

        assert scenario.s == 0.5
        assert scenario.gamma_r == 0.0
        assert scenario.sigma == 1.0
        assert scenario.delta == 1e-2
        assert scenario.alpha == ALPHA_GEOMETRIC
        assert scenario.povm is None
        assert scenario.repetitions == 1
        assert scenario.seed == 0
        assert scenario.free == ["s"]
        assert scenario.output is None

    def test_full_scenario(self, repository):
        scenario = repository.parse_scenario(FULL)

        assert scenario.q == 0.3
        assert scenario.gamma_r == -0.2
        assert scenario.sigma == 2.0
        assert scenario.alpha == "0.3"
        assert scenario.povm == "projector_v"
        assert scenario.slots == 1_000_000
        assert scenario.repetitions == 200
        assert scenario.seed == 2024
        assert scenario.free == ["s", "q"]
        assert scenario.output == "runs/acceptance.csv"

    def test_round_trip_through_sections(self, repository):
        scenario = repository.parse_scenario(FULL)

        text = "\n".join(
            f"[{section}]\n" + "\n".join(f"{key} = {value}" for key, value in values.items())
            for section, values in scenario.to_dict().items()
        )

        assert repository.parse_scenario(text) == scenario

    @pytest.mark.parametrize(
        "text,line",
        [
            ("[parameters]\ns = 0.5\nq = 1.5\n[simulation]\nslots = 10\n", 3),
            ("[parameters]\ns = 0.5\nq = 0.5\n[simulation]\nslots = 0\n", 5),
            ("[parameters]\ns = 0.5\nq = 0.5\n[simulation]\nslots = many\n", 5),
            ("[parameters]\ns = -1\nq = 0.5\n[simulation]\nslots = 10\n", 2),
            ("[parameters]\ns = 0.5\nq = 0.5\ngr = 0.1\n[simulation]\nslots = 10\n", 4),
            ("[parameters]\ns = 0.5\nq = 0.5\n[simulation]\nslots = 10\nfree = s, width\n", 6),
            ("[parameters]\ns = 0.5\nq = 0.5\n[measurement]\npovm = camera\n[simulation]\nslots = 10\n", 5),
            ("[parameters]\ns = 0.5\nq = 0.5\n[optics]\nalpha = 1.2\n[simulation]\nslots = 10\n", 5),
        ],
    )
    def test_invalid_values_report_line(self, repository, text, line):
        with pytest.raises(ScenarioParseError) as exc_info:
            repository.parse_scenario(text)

        assert exc_info.value.line_number == line
        assert str(exc_info.value).startswith(f"line {line}:")

    @pytest.mark.parametrize(
        "text,line",
        [
            ("s = 0.5\n", 1),
            ("[parameters\ns = 0.5\n", 1),
            ("[parameters]\ns 0.5\n", 2),
            ("[parameters]\ns = 0.5\ns = 0.6\n", 3),
            ("[parameters]\ns = 0.5\n[parameters]\n", 3),
        ],
    )
    def test_malformed_lines(self, repository, text, line):
        with pytest.raises(ScenarioParseError) as exc_info:
            repository.parse_scenario(text)

        assert exc_info.value.line_number == line

    def test_missing_section(self, repository):
        with pytest.raises(ScenarioParseError, match="simulation"):
            repository.parse_scenario("[parameters]\ns = 0.5\nq = 0.5\n")

    @pytest.mark.asyncio
    async def test_load_scenario_reads_through_file_manager(self, repository, mock_file_manager):
        # Arrange
        mock_file_manager.load_text.return_value = MINIMAL

        # Act
        scenario = await repository.load_scenario("scenarios/minimal.ini")

        # Assert
        mock_file_manager.load_text.assert_called_once_with("scenarios/minimal.ini")
        assert scenario.slots == 1000

    @pytest.mark.asyncio
    async def test_load_missing_file(self, repository, mock_file_manager):
        mock_file_manager.load_text.return_value = None

        with pytest.raises(ScenarioParseError, match="not found"):
            await repository.load_scenario("absent.ini")
