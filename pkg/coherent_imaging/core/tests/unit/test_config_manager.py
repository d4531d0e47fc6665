"""Unit tests for ConfigManager."""

from pathlib import Path
from unittest.mock import Mock, patch

import pytest

from coherent_imaging.core.api.exceptions import ConfigurationError
from coherent_imaging.core.config_manager import (
    ConfigManager,
    get_config_manager,
    reset_config_manager,
)
from coherent_imaging.core.const import ALPHA_CENTROID, ALPHA_GEOMETRIC, CONFIG_FILE, DEFAULT_DELTA
from coherent_imaging.core.file_manager import FileManager


@pytest.mark.unit
class TestConfigManager:
    """Test ConfigManager."""

    def setup_method(self):
        """Set up test fixtures."""
        reset_config_manager()

        self.mock_file_manager = Mock(spec=FileManager)
        self.mock_file_manager.load_json.return_value = None
        self.mock_file_manager.save_json.return_value = True
        self.mock_file_manager.get_file_path.return_value = Path("/data") / CONFIG_FILE
        self.mock_file_manager.get_file_size.return_value = 512

    def teardown_method(self):
        """Clean up after each test."""
        reset_config_manager()

    def _saved_config(self):
        return self.mock_file_manager.save_json.call_args.args[1]["config"]

    def test_defaults_without_file(self):
        config = ConfigManager(self.mock_file_manager).get_config()

        assert config["optics"]["delta"] == DEFAULT_DELTA
        assert config["optics"]["alpha"] == ALPHA_GEOMETRIC
        assert config["figures"]["points"] == 41
        assert config["log_runs"] is True

    def test_file_values_merge_over_defaults(self):
        # Arrange
        self.mock_file_manager.load_json.return_value = {
            "metadata": {"saved_at": "2024-01-01T00:00:00"},
            "config": {"optics": {"delta": 0.05}, "figures": {"workers": 8}},
        }

        # Act
        config = ConfigManager(self.mock_file_manager).get_config()

        # Assert
        assert config["optics"]["delta"] == 0.05
        assert config["optics"]["sigma"] == 1.0
        assert config["figures"]["workers"] == 8
        assert config["figures"]["points"] == 41

    @pytest.mark.parametrize(
        "stored",
        [
            {"optics": {"delta": 1.5}},
            {"optics": {"alpha": 2.0}},
            {"oracle": {"fd_step": 1e-2}},
            {"figures": {"gamma_legend": [0.0, 1.5]}},
            ["not", "an", "object"],
        ],
    )
    def test_invalid_file_raises(self, stored):
        self.mock_file_manager.load_json.return_value = stored

        with pytest.raises(ConfigurationError):
            ConfigManager(self.mock_file_manager).get_config()

    def test_save_config_wraps_metadata(self):
        manager = ConfigManager(self.mock_file_manager)

        assert manager.save_config(manager.get_config()) is True

        name, payload = self.mock_file_manager.save_json.call_args.args
        assert name == CONFIG_FILE
        assert "saved_at" in payload["metadata"]
        assert payload["config"]["optics"]["sigma"] == 1.0

    def test_save_invalid_config_raises(self):
        manager = ConfigManager(self.mock_file_manager)
        config = manager.get_config()
        config["figures"]["points"] = 1

        with pytest.raises(ConfigurationError):
            manager.save_config(config)
        self.mock_file_manager.save_json.assert_not_called()

    def test_dotted_settings(self):
        manager = ConfigManager(self.mock_file_manager)

        assert manager.get_setting("optics.sigma") == 1.0
        assert manager.get_setting("optics.missing", "fallback") == "fallback"
        assert manager.set_setting("optics.alpha", ALPHA_CENTROID) is True
        assert self._saved_config()["optics"]["alpha"] == ALPHA_CENTROID

    def test_reset_to_defaults(self):
        manager = ConfigManager(self.mock_file_manager)

        manager.reset_to_defaults()

        assert self._saved_config() == manager.get_config()

    def test_build_optical_config_resolves_policy(self):
        self.mock_file_manager.load_json.return_value = {"optics": {"alpha": ALPHA_CENTROID}}
        manager = ConfigManager(self.mock_file_manager)

        assert manager.build_optical_config(q=0.3).alpha == pytest.approx(0.3)
        assert manager.build_optical_config(ALPHA_GEOMETRIC, q=0.3).alpha == pytest.approx(0.5)
        assert manager.build_optical_config(0.2, q=0.3).alpha == pytest.approx(0.2)

    def test_config_info(self):
        manager = ConfigManager(self.mock_file_manager)
        assert manager.get_config_info()["exists"] is False

        self.mock_file_manager.load_json.return_value = {"metadata": {"version": "1.0.0"}, "config": {}}
        info = manager.get_config_info()

        assert info["exists"] is True
        assert info["version"] == "1.0.0"
        assert info["file_size"] == 512

    def test_global_instance(self):
        with patch(
            "coherent_imaging.core.config_manager.get_file_manager",
            return_value=self.mock_file_manager,
        ):
            first = get_config_manager()
            second = get_config_manager()

        assert first is second
        reset_config_manager()
        assert get_config_manager() is not first
