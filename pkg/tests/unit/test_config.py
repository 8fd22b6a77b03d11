"""Unit tests for configuration loading and overrides."""

import json

from whakit.config import DOUBLE_READINGS, Config


class TestConfig:
    """Defaults, JSON file overlay and command-line overrides."""

    def test_defaults(self):
        config = Config()
        assert config.get("search_bound") == 3
        assert config.get("max_degree") == 3
        assert config.get("ambient_cap") == 10000
        assert config.get("double_reading") in DOUBLE_READINGS

    def test_file_overlay(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"search_bound": 5, "max_order": 12}))
        config = Config(str(path))
        assert config.get("search_bound") == 5
        assert config.get("max_order") == 12
        assert config.get("max_degree") == 3

    def test_unknown_keys_ignored(self, tmp_path, quiet_logger):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"colour": "blue"}))
        config = Config(str(path))
        assert "colour" not in config.to_dict()
        assert any(e.message == "ignoring unknown config key" for e in quiet_logger.get_all_logs())

    def test_invalid_json_keeps_defaults(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json")
        assert Config(str(path)).to_dict() == Config.DEFAULT_CONFIG

    def test_non_object_keeps_defaults(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        assert Config(str(path)).to_dict() == Config.DEFAULT_CONFIG

    def test_missing_file_keeps_defaults(self, tmp_path):
        assert Config(str(tmp_path / "absent.json")).get("search_bound") == 3

    def test_override_ignores_none(self):
        config = Config().override(search_bound=None, max_degree=2)
        assert config.get("search_bound") == 3
        assert config.get("max_degree") == 2

    def test_defaults_not_shared(self):
        Config().override(search_bound=9)
        assert Config().get("search_bound") == 3
