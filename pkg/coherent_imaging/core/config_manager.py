"""Configuration manager for the coherent imaging toolkit."""

import copy
import logging
from datetime import datetime
from typing import Any, Dict, Optional, Union

import voluptuous as vol

from .api.exceptions import ConfigurationError
from .api.models.domain.params import OpticalConfig
from .const import (
    ALPHA_CENTROID,
    ALPHA_GEOMETRIC,
    CONFIG_FILE,
    DEFAULT_DELTA,
    DEFAULT_SIGMA,
    FD_STEP,
    GAMMA_LEGEND,
    HG_ORDER,
    VERSION,
)
from .file_manager import FileManager, get_file_manager

_LOGGER = logging.getLogger(__name__)


def _alpha_policy(value: Any) -> Union[str, float]:
    if value in (ALPHA_GEOMETRIC, ALPHA_CENTROID):
        return value
    number = vol.Coerce(float)(value)
    if not 0.0 <= number <= 1.0:
        raise vol.Invalid(f"alpha must lie in [0, 1], got {number}")
    return number


CONFIG_SCHEMA = vol.Schema(
    {
        vol.Required("version"): str,
        vol.Required("optics"): {
            vol.Required("sigma"): vol.All(vol.Coerce(float), vol.Range(min=0.0, min_included=False)),
            vol.Required("delta"): vol.All(
                vol.Coerce(float), vol.Range(min=0.0, max=1.0, min_included=False)
            ),
            vol.Required("alpha"): _alpha_policy,
        },
        vol.Required("oracle"): {
            vol.Required("hg_order"): vol.All(vol.Coerce(int), vol.Range(min=1)),
            vol.Required("fd_step"): vol.All(vol.Coerce(float), vol.Range(min=1e-7, max=1e-4)),
        },
        vol.Required("figures"): {
            vol.Required("points"): vol.All(vol.Coerce(int), vol.Range(min=2)),
            vol.Required("gamma_legend"): [vol.All(vol.Coerce(float), vol.Range(min=-1.0, max=1.0))],
            vol.Required("workers"): vol.All(vol.Coerce(int), vol.Range(min=1)),
        },
        vol.Required("log_runs"): bool,
    }
)


def _deep_merge(base: Dict[str, Any], updates: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in updates.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Manager for configuration data using FileManager."""

    def __init__(self, file_manager: Optional[FileManager] = None):
        """Initialize the configuration manager."""
        self._file_manager = file_manager or get_file_manager()
        self._config_file = CONFIG_FILE
        self._default_config: Dict[str, Any] = {
            "version": VERSION,
            "optics": {
                "sigma": DEFAULT_SIGMA,
                "delta": DEFAULT_DELTA,
                "alpha": ALPHA_GEOMETRIC,
            },
            "oracle": {"hg_order": HG_ORDER, "fd_step": FD_STEP},
            "figures": {
                "points": 41,
                "gamma_legend": list(GAMMA_LEGEND),
                "workers": 4,
            },
            "log_runs": True,
        }

    def get_config(self) -> Dict[str, Any]:
        """Get the current configuration, file values merged over defaults."""
        stored = self._file_manager.load_json(self._config_file)
        if stored is None:
            _LOGGER.debug("No config file found, using defaults")
            return copy.deepcopy(self._default_config)
        if not isinstance(stored, dict):
            raise ConfigurationError(f"{self._config_file} must hold a JSON object")
        stored = stored.get("config", stored)
        merged = _deep_merge(self._default_config, stored)
        try:
            return CONFIG_SCHEMA(merged)
        except vol.Invalid as e:
            _LOGGER.error("Invalid configuration: %s", e)
            raise ConfigurationError(f"Invalid configuration: {e}") from e

    def save_config(self, config: Dict[str, Any]) -> bool:
        """Validate and save configuration to file."""
        try:
            CONFIG_SCHEMA(config)
        except vol.Invalid as e:
            raise ConfigurationError(f"Invalid configuration: {e}") from e
        config_with_meta = {
            "metadata": {"saved_at": datetime.now().isoformat(), "version": VERSION},
            "config": config,
        }
        success = self._file_manager.save_json(self._config_file, config_with_meta)
        if success:
            _LOGGER.info("Configuration saved successfully")
        return success

    def update_config(self, updates: Dict[str, Any]) -> bool:
        """Merge new values into the configuration."""
        return self.save_config(_deep_merge(self.get_config(), updates))

    def get_setting(self, key: str, default: Any = None) -> Any:
        """Get a setting; dotted keys reach into sections (e.g. ``optics.delta``)."""
        value: Any = self.get_config()
        for part in key.split("."):
            if not isinstance(value, dict) or part not in value:
                return default
            value = value[part]
        return value

    def set_setting(self, key: str, value: Any) -> bool:
        """Set a setting; dotted keys reach into sections."""
        update: Dict[str, Any] = {}
        cursor = update
        parts = key.split(".")
        for part in parts[:-1]:
            cursor = cursor.setdefault(part, {})
        cursor[parts[-1]] = value
        return self.update_config(update)

    def reset_to_defaults(self) -> bool:
        """Reset configuration to defaults."""
        return self.save_config(copy.deepcopy(self._default_config))

    def build_optical_config(self, alpha: Optional[Union[str, float]] = None, q: float = 0.5) -> OpticalConfig:
        """OpticalConfig from the configured sigma and delta; alpha policy resolved at q."""
        optics = self.get_config()["optics"]
        cfg = OpticalConfig(sigma=optics["sigma"], delta=optics["delta"])
        return cfg.with_policy(optics["alpha"] if alpha is None else alpha, q)

    def get_config_info(self) -> Dict[str, Any]:
        """Get configuration metadata and info."""
        config_data = self._file_manager.load_json(self._config_file)
        file_path = str(self._file_manager.get_file_path(self._config_file))
        if not isinstance(config_data, dict):
            return {"exists": False, "using_defaults": True, "file_path": file_path}
        metadata = config_data.get("metadata", {})
        return {
            "exists": True,
            "using_defaults": False,
            "file_path": file_path,
            "saved_at": metadata.get("saved_at"),
            "version": metadata.get("version"),
            "file_size": self._file_manager.get_file_size(self._config_file),
        }


# Global instance
_config_manager_instance: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """Get the global configuration manager instance."""
    global _config_manager_instance
    if _config_manager_instance is None:
        _config_manager_instance = ConfigManager()
    return _config_manager_instance


def reset_config_manager() -> None:
    """Reset the global configuration manager instance."""
    global _config_manager_instance
    _config_manager_instance = None
