"""File manager for the coherent imaging toolkit."""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from .const import CSV_FLOAT_FORMAT

_LOGGER = logging.getLogger(__name__)

PathLike = Union[str, Path]


class FileManager:
    """Manager for file operations within the coherent imaging project."""

    def __init__(self, data_dir: Optional[PathLike] = None):
        """Initialize the file manager."""
        self._project_root = self._detect_project_root()
        self._data_dir = Path(data_dir) if data_dir is not None else self._project_root / "data"
        self._ensure_data_directory()

    def _detect_project_root(self) -> Path:
        """Detect the project root directory based on execution context."""
        current_dir = Path.cwd()

        project_root = current_dir
        while project_root != project_root.parent:
            if (project_root / "coherent_imaging").is_dir():
                _LOGGER.debug("Found project root: %s", project_root)
                return project_root
            project_root = project_root.parent

        _LOGGER.warning("Could not detect project root, using current directory: %s", current_dir)
        return current_dir

    def _ensure_data_directory(self) -> None:
        """Ensure the data directory exists."""
        try:
            self._data_dir.mkdir(parents=True, exist_ok=True)
            _LOGGER.debug("Data directory ensured: %s", self._data_dir)
        except Exception as e:
            _LOGGER.error("Failed to create data directory: %s", e)
            raise

    def get_data_directory(self) -> Path:
        """Get the data directory path."""
        return self._data_dir

    def get_file_path(self, filename: PathLike) -> Path:
        """Full path of a file; absolute paths are used as given."""
        path = Path(filename)
        return path if path.is_absolute() else self._data_dir / path

    def save_text(self, filename: PathLike, content: str) -> bool:
        """Save text content to a file."""
        try:
            file_path = self.get_file_path(filename)
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(content, encoding="utf-8")
            _LOGGER.info("Text saved to: %s", file_path)
            return True
        except Exception as e:
            _LOGGER.error("Failed to save text to %s: %s", filename, e)
            return False

    def load_text(self, filename: PathLike) -> Optional[str]:
        """Load text content from a file."""
        try:
            file_path = self.get_file_path(filename)
            if not file_path.exists():
                _LOGGER.warning("File not found: %s", file_path)
                return None
            content = file_path.read_text(encoding="utf-8")
            _LOGGER.debug("Text loaded from: %s", file_path)
            return content
        except Exception as e:
            _LOGGER.error("Failed to load text from %s: %s", filename, e)
            return None

    def save_json(self, filename: PathLike, data: Union[Dict[str, Any], list]) -> bool:
        """Save JSON data to a file."""
        try:
            file_path = self.get_file_path(filename)
            with open(file_path, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=2, ensure_ascii=False)
            _LOGGER.debug("JSON saved to: %s", file_path)
            return True
        except Exception as e:
            _LOGGER.error("Failed to save JSON to %s: %s", filename, e)
            return False

    def load_json(self, filename: PathLike) -> Optional[Union[Dict[str, Any], list]]:
        """Load JSON data from a file."""
        try:
            file_path = self.get_file_path(filename)
            if not file_path.exists():
                _LOGGER.debug("File not found: %s", file_path)
                return None
            with open(file_path, "r", encoding="utf-8") as f:
                data = json.load(f)
            _LOGGER.debug("JSON loaded from: %s", file_path)
            return data
        except Exception as e:
            _LOGGER.error("Failed to load JSON from %s: %s", filename, e)
            return None

    def save_csv(
        self,
        filename: PathLike,
        frame: pd.DataFrame,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> bool:
        """Save a data frame as CSV preceded by ``# key: value`` metadata lines."""
        try:
            buffer = io.StringIO()
            for key, value in (metadata or {}).items():
                buffer.write(f"# {key}: {value}\n")
            frame.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT)
            file_path = self.get_file_path(filename)
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(buffer.getvalue(), encoding="utf-8")
            _LOGGER.info("CSV saved to: %s", file_path)
            return True
        except Exception as e:
            _LOGGER.error("Failed to save CSV to %s: %s", filename, e)
            return False

    def load_csv(self, filename: PathLike) -> Optional[pd.DataFrame]:
        """Load a CSV written by save_csv, skipping metadata lines."""
        try:
            file_path = self.get_file_path(filename)
            if not file_path.exists():
                _LOGGER.warning("File not found: %s", file_path)
                return None
            return pd.read_csv(file_path, comment="#")
        except Exception as e:
            _LOGGER.error("Failed to load CSV from %s: %s", filename, e)
            return None

    def load_csv_metadata(self, filename: PathLike) -> Dict[str, str]:
        """Metadata lines of a CSV written by save_csv."""
        text = self.load_text(filename) or ""
        metadata = {}
        for line in text.splitlines():
            if not line.startswith("#"):
                break
            key, _, value = line[1:].partition(":")
            metadata[key.strip()] = value.strip()
        return metadata

    def file_exists(self, filename: PathLike) -> bool:
        """Check if a file exists."""
        return self.get_file_path(filename).exists()

    def delete_file(self, filename: PathLike) -> bool:
        """Delete a file."""
        try:
            file_path = self.get_file_path(filename)
            if file_path.exists():
                file_path.unlink()
                _LOGGER.info("File deleted: %s", file_path)
                return True
            _LOGGER.warning("File not found for deletion: %s", file_path)
            return False
        except Exception as e:
            _LOGGER.error("Failed to delete file %s: %s", filename, e)
            return False

    def list_files(self, pattern: str = "*") -> List[str]:
        """List files in the data directory matching a pattern."""
        try:
            return sorted(path.name for path in self._data_dir.glob(pattern) if path.is_file())
        except Exception as e:
            _LOGGER.error("Failed to list files with pattern '%s': %s", pattern, e)
            return []

    def get_file_size(self, filename: PathLike) -> Optional[int]:
        """Get the size of a file in bytes."""
        try:
            file_path = self.get_file_path(filename)
            if file_path.exists():
                return file_path.stat().st_size
            return None
        except Exception as e:
            _LOGGER.error("Failed to get file size for %s: %s", filename, e)
            return None


# Global instance
_file_manager_instance: Optional[FileManager] = None


def get_file_manager() -> FileManager:
    """Get the global file manager instance."""
    global _file_manager_instance
    if _file_manager_instance is None:
        _file_manager_instance = FileManager()
    return _file_manager_instance


def reset_file_manager() -> None:
    """Reset the global file manager instance."""
    global _file_manager_instance
    _file_manager_instance = None
