"""Configuration: built-in defaults, an optional JSON file, then overrides."""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from .logger import get_logger


DOUBLE_READINGS = ("auto", "b-legs", "literal")


class Config:
    """Configuration management for whakit runs."""

    DEFAULT_CONFIG: Dict[str, Any] = {
        "search_bound": 3,
        "module_search_bound": 3,
        "max_degree": 3,
        "max_order": 24,
        "ambient_cap": 10000,
        "double_reading": "auto",
        "log_level": "WARNING",
        "log_file": None,
    }

    def __init__(self, config_file: Optional[str] = None):
        self.config = dict(self.DEFAULT_CONFIG)
        if config_file and Path(config_file).exists():
            self.load_config(config_file)
        elif config_file:
            get_logger().warning("cli", "config", "__init__", "config file not found, using defaults",
                                 path=str(config_file))

    def load_config(self, config_file: str) -> None:
        """Overlay known keys from a JSON object; problems keep the defaults."""
        try:
            with open(config_file, "r", encoding="utf-8") as f:
                user_config = json.load(f)
        except (OSError, ValueError) as e:
            get_logger().warning("cli", "config", "load_config", f"failed to load config file: {e}",
                                 path=str(config_file))
            return
        if not isinstance(user_config, dict):
            get_logger().warning("cli", "config", "load_config", "config file is not a JSON object",
                                 path=str(config_file))
            return
        for key, value in user_config.items():
            if key not in self.DEFAULT_CONFIG:
                get_logger().warning("cli", "config", "load_config", "ignoring unknown config key", key=key)
                continue
            self.config[key] = value

    def get(self, key: str, default=None):
        return self.config.get(key, default)

    def override(self, **values) -> "Config":
        """Apply command-line overrides; None means 'not given'."""
        for key, value in values.items():
            if value is not None:
                self.config[key] = value
        return self

    def capped(self, **limits) -> "Config":
        """A copy with each named value lowered to at most its limit."""
        copy = Config()
        copy.config = dict(self.config)
        for key, limit in limits.items():
            copy.config[key] = min(copy.config[key], limit)
        return copy

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.config)
