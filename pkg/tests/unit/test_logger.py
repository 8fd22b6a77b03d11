"""Unit tests for the dual-tag logger."""

import io
import json

import pytest

from whakit.logger import (ConsoleLogHandler, DualTagLogger, FileLogHandler, LogFilter, LogLevel,
                           configure_logger, get_logger)


class TestLogLevel:
    """Level parsing and ordering."""

    @pytest.mark.parametrize("name,level", [("debug", LogLevel.DEBUG), ("WARNING", LogLevel.WARNING),
                                            ("Error", LogLevel.ERROR)])
    def test_parse(self, name, level):
        assert LogLevel.parse(name) is level

    def test_parse_unknown(self):
        with pytest.raises(ValueError):
            LogLevel.parse("loud")

    def test_ranks_increase(self):
        ranks = [lvl.rank for lvl in (LogLevel.DEBUG, LogLevel.INFO, LogLevel.WARNING,
                                      LogLevel.ERROR, LogLevel.CRITICAL)]
        assert ranks == sorted(ranks)


class TestDualTagLogger:
    """Records are stored by feature and module tag."""

    def test_min_level_filters(self):
        logger = DualTagLogger("t")
        logger.set_min_level(LogLevel.WARNING)
        logger.info("wba", "wba", "check_wba", "dropped")
        logger.warning("wba", "wba", "check_wba", "kept")
        assert [e.message for e in logger.get_all_logs()] == ["kept"]

    def test_tag_indexes(self):
        logger = DualTagLogger("t")
        logger.debug("double", "double", "build_double", "one", dim=4)
        logger.debug("cyclic", "cyclic", "operators", "two")
        assert len(logger.get_logs_by_feature("double")) == 1
        assert logger.get_logs_by_module("cyclic")[0].message == "two"
        assert logger.get_logs_by_feature("double")[0].parameters == {"dim": 4}

    def test_filter(self):
        logger = DualTagLogger("t")
        logger.debug("wba", "wba", "f", "a")
        logger.error("wha", "wha", "g", "b")
        found = logger.get_filtered_logs(LogFilter(min_level=LogLevel.WARNING))
        assert [e.message for e in found] == ["b"]
        found = logger.get_filtered_logs(LogFilter(function_names=["f"]))
        assert [e.feature_tag for e in found] == ["wba"]

    def test_console_handler_writes_formatted_line(self):
        stream = io.StringIO()
        logger = DualTagLogger("t")
        logger.add_handler(ConsoleLogHandler(stream=stream))
        logger.info("zoo", "zoo", "build", "zoo entry built", name="Z2")
        line = stream.getvalue()
        assert "[Feature: zoo]" in line
        assert '"name": "Z2"' in line

    def test_broken_handler_does_not_abort(self, capsys):
        class Broken:
            def handle(self, entry):
                raise RuntimeError("down")

        logger = DualTagLogger("t")
        logger.add_handler(Broken())
        logger.info("wba", "wba", "f", "still stored")
        assert len(logger.get_all_logs()) == 1
        assert "Error in log handler" in capsys.readouterr().err

    def test_parameters_are_jsonable(self):
        logger = DualTagLogger("t")
        logger.info("wba", "wba", "f", "m", shape=(2, 3), obj=object())
        data = logger.get_all_logs()[0].to_dict()
        assert data["parameters"]["shape"] == [2, 3]
        assert isinstance(data["parameters"]["obj"], str)


class TestFileLogging:
    """JSON-lines files and exports."""

    def test_file_handler_appends_json_lines(self, tmp_path):
        path = tmp_path / "run.jsonl"
        logger = configure_logger(console=False, file_path=str(path), min_level=LogLevel.INFO)
        logger.info("radford", "radford", "radford_check", "done", passed=True)
        logger.info("radford", "radford", "radford_check", "again", passed=False)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2
        assert json.loads(lines[0])["parameters"] == {"passed": True}
        assert get_logger() is logger

    def test_rotation(self, tmp_path):
        path = tmp_path / "small.jsonl"
        logger = DualTagLogger("t")
        logger.add_handler(FileLogHandler(str(path), rotate_size=10))
        for k in range(3):
            logger.info("wba", "wba", "f", f"message {k}")
        assert len(list(tmp_path.glob("small_*.jsonl"))) >= 1

    @pytest.mark.parametrize("fmt", ["json", "csv", "text"])
    def test_export(self, tmp_path, fmt):
        logger = DualTagLogger("t")
        logger.info("wba", "wba", "f", "exported", k=1)
        out = tmp_path / f"logs.{fmt}"
        logger.export_logs(str(out), format_type=fmt)
        assert "exported" in out.read_text(encoding="utf-8")
