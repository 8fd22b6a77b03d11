"""
Dual-tag logging for whakit.

Every record is tagged with a FEATURE tag (the verification suite or pipeline
being run, e.g. ``wba`` or ``double``) and a MODULE tag (the library module
that emitted it), so a run can be sliced either by what the user asked for or
by where the work happened. The console handler writes to stderr; stdout is
reserved for reports.
"""

import csv
import json
import sys
import threading
import time
from collections import defaultdict, deque
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from functools import partialmethod
from pathlib import Path
from typing import Any, Callable, Deque, Dict, FrozenSet, Iterable, List, Optional, TextIO


class LogLevel(Enum):
    """Log severity levels"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

    @property
    def rank(self) -> int:
        return list(LogLevel).index(self)

    @classmethod
    def parse(cls, name: str) -> "LogLevel":
        try:
            return cls(str(name).upper())
        except ValueError:
            raise ValueError(f"unknown log level {name!r}") from None


def _jsonable(value: Any) -> Any:
    """Parameters as JSON values; matrices, fields and enums become strings."""
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


@dataclass(frozen=True)
class LogEntry:
    """A single record with both tags and the call parameters."""
    timestamp: float
    level: LogLevel
    feature_tag: str
    module_tag: str
    function_name: str
    message: str
    parameters: Dict[str, Any] = field(default_factory=dict)

    @property
    def formatted_timestamp(self) -> str:
        return datetime.fromtimestamp(self.timestamp).isoformat(timespec="milliseconds")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp,
            "time": self.formatted_timestamp,
            "level": self.level.value,
            "feature_tag": self.feature_tag,
            "module_tag": self.module_tag,
            "function_name": self.function_name,
            "message": self.message,
            "parameters": self.parameters,
        }

    def to_json(self) -> str:
        """One-line JSON, suitable for JSON-lines files."""
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def to_formatted_string(self) -> str:
        return (f"[{self.formatted_timestamp}] [{self.level.value}] "
                f"[Feature: {self.feature_tag}] [Module: {self.module_tag}] "
                f"[{self.function_name}] {self.message} | Params: {json.dumps(self.parameters)}")


def _as_set(values: Optional[Iterable]) -> Optional[FrozenSet]:
    return frozenset(values) if values else None


@dataclass
class LogFilter:
    """Filter records by tag, level, time window or function name; unset fields match everything."""
    feature_tags: Optional[Iterable[str]] = None
    module_tags: Optional[Iterable[str]] = None
    levels: Optional[Iterable[LogLevel]] = None
    min_level: Optional[LogLevel] = None
    start_time: Optional[float] = None
    end_time: Optional[float] = None
    function_names: Optional[Iterable[str]] = None

    def __post_init__(self):
        self.feature_tags = _as_set(self.feature_tags)
        self.module_tags = _as_set(self.module_tags)
        self.levels = _as_set(self.levels)
        self.function_names = _as_set(self.function_names)

    def matches(self, entry: LogEntry) -> bool:
        checks = (
            self.feature_tags is None or entry.feature_tag in self.feature_tags,
            self.module_tags is None or entry.module_tag in self.module_tags,
            self.levels is None or entry.level in self.levels,
            self.min_level is None or entry.level.rank >= self.min_level.rank,
            self.start_time is None or entry.timestamp >= self.start_time,
            self.end_time is None or entry.timestamp <= self.end_time,
            self.function_names is None or entry.function_name in self.function_names,
        )
        return all(checks)


class LogStorage:
    """Bounded in-memory store; the oldest records are evicted first."""

    def __init__(self, capacity: int = 10000):
        self.capacity = capacity
        self._entries: Deque[LogEntry] = deque()
        self._by_tag: Dict[str, Dict[str, Deque[LogEntry]]] = {
            "feature": defaultdict(deque),
            "module": defaultdict(deque),
        }
        self._lock = threading.Lock()

    def add(self, entry: LogEntry) -> None:
        with self._lock:
            self._entries.append(entry)
            self._by_tag["feature"][entry.feature_tag].append(entry)
            self._by_tag["module"][entry.module_tag].append(entry)
            if len(self._entries) > self.capacity:
                evicted = self._entries.popleft()
                # tag queues are in insertion order, so the evicted record heads both
                self._by_tag["feature"][evicted.feature_tag].popleft()
                self._by_tag["module"][evicted.module_tag].popleft()

    def all(self) -> List[LogEntry]:
        with self._lock:
            return list(self._entries)

    def tagged(self, kind: str, tag: str) -> List[LogEntry]:
        with self._lock:
            return list(self._by_tag[kind].get(tag, ()))

    def select(self, log_filter: LogFilter) -> List[LogEntry]:
        return [entry for entry in self.all() if log_filter.matches(entry)]

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            for index in self._by_tag.values():
                index.clear()


class LogHandler:
    """Base class for log handlers"""

    def handle(self, entry: LogEntry) -> None:
        raise NotImplementedError


class ConsoleLogHandler(LogHandler):
    """One human-readable line per record on stderr (or ``stream``)."""

    def __init__(self, format_func: Optional[Callable[[LogEntry], str]] = None,
                 stream: Optional[TextIO] = None):
        self.format_func = format_func or LogEntry.to_formatted_string
        self.stream = stream

    def handle(self, entry: LogEntry) -> None:
        # resolved per call so that a swapped sys.stderr is honoured
        out = self.stream or sys.stderr
        out.write(self.format_func(entry) + "\n")
        out.flush()


class FileLogHandler(LogHandler):
    """Appends JSON lines to a file, rotating it past ``rotate_size`` bytes."""

    def __init__(self, filepath: str, format_func: Optional[Callable[[LogEntry], str]] = None,
                 rotate_size: Optional[int] = None):
        self.filepath = Path(filepath)
        self.format_func = format_func or LogEntry.to_json
        self.rotate_size = rotate_size
        self._lock = threading.Lock()

    def _needs_rotation(self) -> bool:
        return bool(self.rotate_size) and self.filepath.exists() \
            and self.filepath.stat().st_size > self.rotate_size

    def handle(self, entry: LogEntry) -> None:
        with self._lock:
            if self._needs_rotation():
                stamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
                self.filepath.rename(self.filepath.with_name(f"{self.filepath.stem}_{stamp}{self.filepath.suffix}"))
            with self.filepath.open("a", encoding="utf-8") as f:
                f.write(self.format_func(entry) + "\n")


def _export_json(f: TextIO, logs: List[LogEntry]) -> None:
    json.dump([log.to_dict() for log in logs], f, indent=2, ensure_ascii=False)


def _export_csv(f: TextIO, logs: List[LogEntry]) -> None:
    if not logs:
        return
    rows = [dict(log.to_dict(), parameters=json.dumps(log.parameters)) for log in logs]
    writer = csv.DictWriter(f, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)


def _export_text(f: TextIO, logs: List[LogEntry]) -> None:
    f.writelines(log.to_formatted_string() + "\n" for log in logs)


_EXPORTERS: Dict[str, Callable[[TextIO, List[LogEntry]], None]] = {
    "json": _export_json,
    "csv": _export_csv,
    "text": _export_text,
}


class DualTagLogger:
    """
    Logger whose records carry a feature tag and a module tag.

    Library code calls ``debug``/``info`` with the suite as feature tag and
    its own module name as module tag, plus keyword parameters describing the
    object being checked:

        get_logger().info("radford", "radford", "radford_check", report.summary(), passed=True)
    """

    def __init__(self, name: str = "whakit", min_level: LogLevel = LogLevel.DEBUG):
        self.name = name
        self.min_level = min_level
        self.storage = LogStorage()
        self.handlers: List[LogHandler] = []

    def add_handler(self, handler: LogHandler) -> None:
        self.handlers.append(handler)

    def set_min_level(self, level: LogLevel) -> None:
        self.min_level = level

    def log(self, level: LogLevel, feature_tag: str, module_tag: str, function_name: str,
            message: str, parameters: Optional[Dict[str, Any]] = None) -> None:
        """
        Store a record and hand it to every handler.

        Args:
            level: Log severity level
            feature_tag: Suite or pipeline this record belongs to
            module_tag: Library module emitting the record
            function_name: Name of the function generating the record
            message: Log message
            parameters: Parameters and their values
        """
        if level.rank < self.min_level.rank:
            return
        entry = LogEntry(time.time(), level, feature_tag, module_tag, function_name, message,
                         _jsonable(parameters or {}))
        self.storage.add(entry)
        for handler in self.handlers:
            try:
                handler.handle(entry)
            except Exception as e:
                print(f"Error in log handler: {e}", file=sys.stderr)

    def _at(self, level: LogLevel, feature_tag: str, module_tag: str, function_name: str,
            message: str, **params) -> None:
        self.log(level, feature_tag, module_tag, function_name, message, params)

    debug = partialmethod(_at, LogLevel.DEBUG)
    info = partialmethod(_at, LogLevel.INFO)
    warning = partialmethod(_at, LogLevel.WARNING)
    error = partialmethod(_at, LogLevel.ERROR)
    critical = partialmethod(_at, LogLevel.CRITICAL)

    def get_all_logs(self) -> List[LogEntry]:
        return self.storage.all()

    def get_logs_by_feature(self, feature_tag: str) -> List[LogEntry]:
        return self.storage.tagged("feature", feature_tag)

    def get_logs_by_module(self, module_tag: str) -> List[LogEntry]:
        return self.storage.tagged("module", module_tag)

    def get_filtered_logs(self, log_filter: LogFilter) -> List[LogEntry]:
        return self.storage.select(log_filter)

    def export_logs(self, filepath: str, log_filter: Optional[LogFilter] = None,
                    format_type: str = "json") -> None:
        """
        Write stored records to a file.

        Raises:
            ValueError: for a format other than json, csv or text
        """
        exporter = _EXPORTERS.get(format_type)
        if exporter is None:
            raise ValueError(f"unknown export format {format_type!r}")
        logs = self.storage.select(log_filter) if log_filter else self.storage.all()
        with open(filepath, "w", encoding="utf-8", newline="") as f:
            exporter(f, logs)


_global_logger: Optional[DualTagLogger] = None


def get_logger() -> DualTagLogger:
    """Process-wide logger; warnings and above go to stderr until configured."""
    global _global_logger
    if _global_logger is None:
        _global_logger = DualTagLogger(min_level=LogLevel.WARNING)
        _global_logger.add_handler(ConsoleLogHandler())
    return _global_logger


def configure_logger(name: str = "whakit", console: bool = True, file_path: Optional[str] = None,
                     min_level: LogLevel = LogLevel.WARNING,
                     rotate_size: Optional[int] = 5 * 1024 * 1024) -> DualTagLogger:
    """
    Replace the process-wide logger.

    Args:
        console: Whether to log to stderr
        file_path: Optional JSON-lines log file
        min_level: Minimum log level
        rotate_size: Rotate the log file once it exceeds this many bytes

    Returns:
        Configured logger instance
    """
    global _global_logger
    _global_logger = DualTagLogger(name, min_level)
    if console:
        _global_logger.add_handler(ConsoleLogHandler())
    if file_path:
        _global_logger.add_handler(FileLogHandler(file_path, rotate_size=rotate_size))
    return _global_logger
