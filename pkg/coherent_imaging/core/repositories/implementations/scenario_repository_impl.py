"""Scenario repository implementation."""

import logging
from typing import Any, Dict, Tuple

from ...api.exceptions import ScenarioParseError
from ...api.models.dto.scenario_dto import ScenarioDTO
from ...file_manager import FileManager
from ..interfaces.scenario_repository import ScenarioRepository

_LOGGER = logging.getLogger(__name__)

_COMMENT_PREFIXES = ("#", ";")


class ScenarioRepositoryImpl(ScenarioRepository):
    """Reads flat ``key = value`` scenario files with ``[section]`` headers."""

    def __init__(self, file_manager: FileManager):
        """Initialize the repository with a file manager."""
        self._file_manager = file_manager

    async def load_scenario(self, path: str) -> ScenarioDTO:
        """Load and validate a scenario file."""
        text = self._file_manager.load_text(path)
        if text is None:
            raise ScenarioParseError(f"Scenario file not found: {path}")
        scenario = self.parse_scenario(text)
        _LOGGER.info("Scenario loaded from %s", path)
        return scenario

    def parse_scenario(self, text: str) -> ScenarioDTO:
        """Parse scenario text with [section] headers and key = value lines."""
        sections: Dict[str, Dict[str, Any]] = {}
        line_numbers: Dict[Tuple[str, str], int] = {}
        current = None

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(_COMMENT_PREFIXES):
                continue
            if line.startswith("["):
                if not line.endswith("]") or len(line) < 3:
                    raise ScenarioParseError(f"malformed section header {line!r}", number)
                current = line[1:-1].strip().lower()
                if current in sections:
                    raise ScenarioParseError(f"duplicate section [{current}]", number)
                sections[current] = {}
                line_numbers[(current, "")] = number
                continue
            if current is None:
                raise ScenarioParseError("key outside of any [section]", number)
            key, separator, value = line.partition("=")
            key = key.strip().lower()
            if not separator or not key:
                raise ScenarioParseError(f"expected 'key = value', got {line!r}", number)
            if key in sections[current]:
                raise ScenarioParseError(f"duplicate key {key!r} in [{current}]", number)
            sections[current][key] = value.strip()
            line_numbers[(current, key)] = number

        return ScenarioDTO.from_dict(sections, line_numbers)
